#include <cctype>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfrob/cartan.hpp"
#include "hopfrob/pipeline.hpp"

using namespace hopfrob;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

const HopfInclusion& pick_inclusion(const Document& doc, const std::string& name, const std::string& spec) {
    if (doc.inclusions.empty()) throw InputError(spec, 0, 0, "input defines no inclusion");
    if (name.empty()) return doc.inclusions.front();
    for (const auto& incl : doc.inclusions)
        if (incl.name == name) return incl;
    throw InputError(spec, 0, 0, "no inclusion named " + name);
}

std::optional<bool> parse_bool(const std::string& s, const std::string& opt) {
    if (s.empty()) return std::nullopt;
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw InputError(opt, 0, 0, "expected true or false, got '" + s + "'");
}

std::vector<std::pair<char, int>> parse_types(const std::string& list) {
    if (list.empty()) return small_rank_types();
    std::vector<std::pair<char, int>> out;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.size() < 2 || !std::isupper(static_cast<unsigned char>(item[0])))
            throw InputError("--types", 0, 0, "bad Cartan type '" + item + "'");
        try {
            out.emplace_back(item[0], std::stoi(item.substr(1)));
        } catch (const std::exception&) {
            throw InputError("--types", 0, 0, "bad Cartan rank in '" + item + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Frobenius extensions of finite-dimensional Hopf algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--report", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string input, inclusion, lambda_scale = "1";
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Bundle file or builtin:<name>")->required();
        sub->add_option("--inclusion", inclusion, "Inclusion name when the bundle has several");
        sub->add_option("--lambda-scale", lambda_scale, "Rescale the bar integral by this cyclotomic scalar");
    };

    CLI::App* verify = app.add_subcommand("verify", "Verify Hopf axioms, inclusions and modules");
    verify->add_option("input", input, "Bundle file or builtin:<name>")->required();

    CLI::App* analyze = app.add_subcommand("analyze", "Decide the Frobenius property and related structure");
    add_input(analyze);
    std::string expect_frobenius, expect_central;
    analyze->add_option("--expect-frobenius", expect_frobenius, "Fail unless frobenius matches");
    analyze->add_option("--expect-central", expect_central, "Fail unless centrality matches");

    CLI::App* functor = app.add_subcommand("check-functor", "Check the induction functor");
    add_input(functor);
    FunctorFlags fflags;
    std::string modules_path;
    functor->add_flag("--frobenius-monoidal", fflags.frobenius_monoidal, "Frobenius monoidal axioms on all triples");
    functor->add_flag("--braided", fflags.braided, "Braided Frobenius axioms on YD pairs");
    functor->add_flag("--separable", fflags.separable, "Separability scalar");
    functor->add_option("--modules", modules_path, "Bundle with K-modules to sample");

    CLI::App* objects = app.add_subcommand("frob-objects", "Push Frobenius algebra objects along induction");
    add_input(objects);
    std::string object_spec = "all";
    objects->add_option("--objects", object_spec, "trivial, etale:<n>,<ex>,<ey>, all-etale or all");

    CLI::App* scan = app.add_subcommand("scan-sl2", "Unimodularity of standard subalgebras of u(sl2)");
    int ell = 5;
    scan->add_option("--l", ell, "Odd order of the root of unity")->check(CLI::Range(3, 99));

    CLI::App* cartan = app.add_subcommand("cartan-check", "Row-sum obstruction scan over Cartan types");
    std::string types;
    std::vector<int> ells{5, 7, 9};
    cartan->add_option("--types", types, "Comma-separated types such as A2,B3,G2");
    cartan->add_option("--ell", ells, "Odd orders")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        CommandResult result;
        auto options = [&] {
            AnalysisOptions o;
            o.lambda_scale = Scalar::parse(lambda_scale, 1);
            return o;
        };
        if (*verify) {
            result = run_verify(load_input(input));
        } else if (*analyze) {
            Document doc = load_input(input);
            AnalyzeFlags flags;
            flags.options = options();
            flags.expect_frobenius = parse_bool(expect_frobenius, "--expect-frobenius");
            flags.expect_central = parse_bool(expect_central, "--expect-central");
            result = run_analyze(pick_inclusion(doc, inclusion, input), flags);
        } else if (*functor) {
            Document doc = load_input(input);
            const HopfInclusion& incl = pick_inclusion(doc, inclusion, input);
            fflags.options = options();
            std::vector<HModule> modules = default_modules(incl.K);
            std::vector<YDModule> yd = default_yd_modules(incl.K);
            if (!modules_path.empty()) {
                Document extra = load_input(modules_path);
                if (!extra.modules.empty()) modules.clear();
                for (const auto& m : extra.modules) {
                    if (m.over->name != incl.K->name) throw InputError(modules_path, 0, 0, m.name + " is not over " + incl.K->name);
                    modules.push_back(m);
                }
                if (!extra.yd_modules.empty()) yd = extra.yd_modules;
            }
            result = run_check_functor(incl, modules, yd, fflags);
        } else if (*objects) {
            Document doc = load_input(input);
            result = run_frob_objects(pick_inclusion(doc, inclusion, input), object_spec, options());
        } else if (*scan) {
            if (ell % 2 == 0) throw InputError("--l", 0, 0, "ell must be odd");
            result = run_scan_sl2(ell);
        } else if (*cartan) {
            for (int e : ells)
                if (e < 3 || e % 2 == 0) throw InputError("--ell", 0, 0, "ell must be odd and at least 3");
            result = run_cartan_check(parse_types(types), ells);
        }
        if (!input.empty()) {
            result.input = input;
            result.input_digest = input_digest(input);
        }
        std::cout << (format == "json" ? render_json(result) : render_text(result));
        return result.report.all_pass() ? kPass : kFail;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
