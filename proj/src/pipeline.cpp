#include "hopfrob/pipeline.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "hopfrob/builders.hpp"
#include "hopfrob/cartan.hpp"
#include "json.hpp"

namespace hopfrob {

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string flag(bool b) { return b ? "true" : "false"; }

// Nonzero values of a functional, keyed by basis label.
std::string functional_str(const FinHopf& h, const SparseVec& f) {
    std::string out = "{";
    for (const auto& [i, c] : f) out += (out.size() > 1 ? ", " : "") + h.labels[i] + ": " + c.str();
    return out + "}";
}

std::string functional_str(int dim, const SparseVec& f) {
    std::string out = "{";
    for (const auto& [i, c] : f) out += (out.size() > 1 ? ", " : "") + std::to_string(i) + ": " + c.str();
    (void)dim;
    return out + "}";
}

bool is_klein(const HopfPtr& k) { return k->name == "kK" && k->dim == 4; }

}  // namespace

std::string input_digest(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return fnv1a(spec);
    std::ifstream in(spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return fnv1a(buf.str());
}

std::vector<HModule> default_modules(const HopfPtr& k) {
    auto chars = group_characters(k);
    if (chars.empty()) return {trivial_module(k)};
    return chars;
}

std::vector<YDModule> default_yd_modules(const HopfPtr& k) {
    auto chars = group_characters(k);
    if (chars.empty()) return {trivial_yd(k)};
    std::vector<YDModule> out;
    for (int g = 0; g < k->dim; ++g)
        for (const auto& c : chars) {
            YDModule y{c, grouplike_coaction(*k, g, 1)};
            y.mod.name += "^" + k->labels[g];
            out.push_back(std::move(y));
        }
    return out;
}

CommandResult run_verify(const Document& doc) {
    CommandResult r;
    r.command = "verify";
    r.report.title = "verify";
    for (const auto& h : doc.hopfs) {
        r.report.merge(verify_hopf(*h), h->name);
        r.facts.push_back({h->name + ".dim", std::to_string(h->dim)});
    }
    for (const auto& incl : doc.inclusions) r.report.merge(verify_inclusion(incl), incl.name);
    for (const auto& m : doc.modules) r.report.merge(verify_module(m), m.name);
    for (const auto& y : doc.yd_modules) r.report.merge(verify_yd(y), y.name() + ".yd");
    return r;
}

CommandResult run_analyze(const HopfInclusion& incl, const AnalyzeFlags& flags) {
    CommandResult r;
    r.command = "analyze";
    AnalysisResult a;
    try {
        a = analyze_extension(incl, flags.options);
    } catch (const std::logic_error& ex) {
        r.report.title = "analyze " + incl.name;
        r.report.add("frobenius_criteria_agree", false, ex.what(), "ext.frobenius");
        return r;
    }
    r.report = a.report;
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    r.facts.push_back({"dim_K", std::to_string(K.dim)});
    r.facts.push_back({"dim_H", std::to_string(H.dim)});
    r.facts.push_back({"unimodular_K", flag(is_unimodular(K))});
    r.facts.push_back({"unimodular_H", flag(is_unimodular(H))});
    r.facts.push_back({"normal", flag(is_normal_subalgebra(incl))});
    std::optional<bool> frob, central;
    if (r.report.all_pass() || a.ctx) {
        FrobeniusDecision d = a.ctx ? a.ctx->decision : is_frobenius_extension(incl);
        frob = d.frobenius;
        r.facts.push_back({"frobenius", flag(d.frobenius)});
        r.facts.push_back({"frobenius_via_chi", flag(d.via_chi)});
        r.facts.push_back({"frobenius_via_alpha", flag(d.via_alpha)});
        r.facts.push_back({"chi", functional_str(K, d.chi)});
        r.facts.push_back({"alpha_H", functional_str(H, d.alpha_H)});
        r.facts.push_back({"alpha_K", functional_str(K, d.alpha_K)});
    }
    if (a.ctx) {
        const FrobeniusContext& c = *a.ctx;
        central = c.central;
        r.facts.push_back({"index", std::to_string(c.r)});
        r.facts.push_back({"lambda", functional_str(c.bq.dimbar, c.lambda)});
        r.facts.push_back({"tr(1)", K.element_str(c.tr_of(H.unit))});
        std::string basis, duals;
        for (std::size_t i = 0; i < c.left.elems.size(); ++i) {
            basis += (i ? ", " : "") + H.labels[c.left.elems[i]];
            duals += (i ? "; " : "") + H.element_str(c.delta[i]);
        }
        r.facts.push_back({"free_basis", "{" + basis + "}"});
        r.facts.push_back({"dual_basis", "{" + duals + "}"});
        r.facts.push_back({"central", flag(c.central)});
        r.facts.push_back({"bar_dual_unimodular", flag(bar_dual_is_unimodular(c.bq, c.lambda))});
        auto ratio = fms_lambda_ratio(incl, c.bq, c.lambda);
        r.facts.push_back({"fms_lambda_ratio", ratio ? ratio->str() : "none"});
    }
    if (flags.expect_frobenius)
        r.report.add("expect_frobenius", frob && *frob == *flags.expect_frobenius,
                     frob ? "frobenius=" + flag(*frob) : "undecided", "cli.expect");
    if (flags.expect_central)
        r.report.add("expect_central", central && *central == *flags.expect_central,
                     central ? "central=" + flag(*central) : "not frobenius", "cli.expect");
    return r;
}

CommandResult run_check_functor(const HopfInclusion& incl, const std::vector<HModule>& modules,
                                const std::vector<YDModule>& yd, const FunctorFlags& flags) {
    CommandResult r;
    r.command = "check-functor";
    r.report.title = "check-functor " + incl.name;
    FrobeniusContext ctx;
    try {
        ctx = make_frobenius_context(incl, flags.options);
    } catch (const std::exception& ex) {
        r.report.add("frobenius_extension", false, ex.what(), "ext.frobenius");
        return r;
    }
    r.facts.push_back({"modules", std::to_string(modules.size())});
    r.report.merge(verify_lax_oplax(ctx, modules), "lax_oplax");
    if (flags.frobenius_monoidal) {
        int failures = 0;
        std::string first;
        for (const auto& x : modules)
            for (const auto& y : modules)
                for (const auto& z : modules) {
                    Report rep = verify_frobenius_monoidal(ctx, x, y, z);
                    if (!rep.all_pass() && failures++ == 0) first = x.name + "," + y.name + "," + z.name;
                }
        r.report.add("frobenius_monoidal", failures == 0, first, "ind.frobenius_monoidal",
                     std::to_string(modules.size() * modules.size() * modules.size()) + " triples");
    }
    if (flags.braided) {
        if (!ctx.central) {
            r.report.add_status("braided", Status::Skipped, "", "yd.braided_frobenius", "extension not central");
        } else {
            int failures = 0;
            std::string first;
            for (const auto& v : yd) {
                Report rep = verify_yd(z_induce(ctx, v));
                if (!rep.all_pass() && failures++ == 0) first = v.name();
            }
            r.report.add("z_induce_yd", failures == 0, first, "yd.axioms", std::to_string(yd.size()) + " modules");
            failures = 0;
            for (const auto& x : yd)
                for (const auto& y : yd) {
                    Report rep = verify_braided_frobenius(ctx, x, y);
                    if (!rep.all_pass() && failures++ == 0) first = x.name() + "," + y.name();
                }
            r.report.add("braided_frobenius", failures == 0, first, "yd.braided_frobenius",
                         std::to_string(yd.size() * yd.size()) + " pairs");
        }
    }
    if (flags.separable) {
        std::vector<std::pair<HModule, HModule>> pairs;
        for (const auto& x : modules)
            for (const auto& y : modules) pairs.emplace_back(x, y);
        std::optional<Scalar> beta;
        bool sep = is_separable_functor(ctx, pairs, &beta);
        r.report.add("separable", sep, "lax oplax not a nonzero scalar", "ind.separable",
                     beta ? "beta=" + beta->str() : "");
        r.facts.push_back({"separability_beta", beta ? beta->str() : "none"});
    }
    return r;
}

CommandResult run_frob_objects(const HopfInclusion& incl, const std::string& spec, const AnalysisOptions& opt) {
    auto bad = [&](const std::string& msg) { return InputError("object spec '" + spec + "'", 0, 0, msg); };
    std::vector<std::tuple<std::string, int, int>> etale;
    bool trivial = false;
    if (spec == "trivial" || spec == "all") trivial = true;
    if (spec == "all-etale" || (spec == "all" && is_klein(incl.K)))
        for (const char* n : {"x", "y", "xy"})
            for (int ex : {1, -1})
                for (int ey : {1, -1}) etale.emplace_back(n, ex, ey);
    if (spec.rfind("etale:", 0) == 0) {
        std::istringstream in(spec.substr(6));
        std::string n, sx, sy;
        if (!std::getline(in, n, ',') || !std::getline(in, sx, ',') || !std::getline(in, sy) ||
            (sx != "1" && sx != "-1") || (sy != "1" && sy != "-1"))
            throw bad("expected etale:<n>,<+-1>,<+-1>");
        if (n != "x" && n != "y" && n != "xy") throw bad("n must be x, y or xy");
        etale.emplace_back(n, std::stoi(sx), std::stoi(sy));
    }
    if (!trivial && etale.empty()) throw bad("expected trivial, etale:<n>,<ex>,<ey>, all-etale or all");
    if (!etale.empty() && !is_klein(incl.K)) throw bad("etale objects need K = kK");

    CommandResult r;
    r.command = "frob-objects";
    r.report.title = "frob-objects " + incl.name;
    FrobeniusContext ctx;
    try {
        ctx = make_frobenius_context(incl, opt);
    } catch (const std::exception& ex) {
        r.report.add("frobenius_extension", false, ex.what(), "ext.frobenius");
        return r;
    }
    if (!ctx.central) {
        r.report.add_status("frob_objects", Status::Skipped, "", "frob.push", "extension not central");
        return r;
    }
    const bool h8 = incl.H->name == "H8" && is_klein(incl.K);
    Scalar t = coeff(ctx.tr_of(ctx.H().unit), 0);
    auto record = [&](const std::string& key, const FrobObject& f) {
        RigidReport rr = is_rigid_frobenius(f);
        r.report.merge(rr.details, key);
        r.facts.push_back({key + ".rigid", flag(rr.rigid())});
        r.facts.push_back({key + ".betas",
                           rr.betas ? "(" + rr.betas->first.str() + ", " + rr.betas->second.str() + ")" : "none"});
        r.facts.push_back({key + ".dim_hom_1", std::to_string(rr.invariant_dim)});
    };
    if (trivial) {
        FrobObject pushed = push_frobenius(ctx, trivial_frobenius(incl.K));
        record("Z(Ind)(1)", pushed);
        if (h8) {
            FrobObject a = zone_h_pushed(ctx), d = zone_h(incl.H, t);
            bool eq = a.mult == d.mult && a.unit == d.unit && a.comult == d.comult && a.counit == d.counit;
            r.report.add("Z(Ind)(1).closed_form", eq, "structure maps differ", "frob.zone");
        }
    }
    for (const auto& [n, ex, ey] : etale) {
        FrobObject A = build_group_etale(incl.K, n, ex, ey);
        FrobObject B = push_frobenius(ctx, A);
        std::string key = "B(" + n + "," + std::to_string(ex) + "," + std::to_string(ey) + ")";
        record(key, B);
        if (h8) {
            FrobObject D = b_algebra(incl.H, n, ex, ey, t);
            bool eq = B.mult == D.mult && B.unit == D.unit && B.comult == D.comult && B.counit == D.counit &&
                      B.carrier.coaction == D.carrier.coaction;
            for (int a = 0; a < incl.H->dim; ++a) eq = eq && B.carrier.mod.action[a] == D.carrier.mod.action[a];
            r.report.add(key + ".closed_form", eq, "structure maps differ", "frob.b_algebra");
        }
    }
    return r;
}

CommandResult run_scan_sl2(int ell) {
    CommandResult r;
    r.command = "scan-sl2";
    r.report.title = "unimodularity scan u(sl2," + std::to_string(ell) + ")";
    for (const auto& row : unimodularity_scan_sl2(ell)) {
        std::string detail = "unimodular=" + flag(row.unimodular);
        if (row.asserted)
            r.report.add(row.label(), row.unimodular == row.predicted, detail, "sl2.unimodular", detail);
        else
            r.report.add_status(row.label(), Status::Skipped, "", "sl2.unimodular", detail + " (ell = 3 not covered)");
        r.facts.push_back({row.label(), flag(row.unimodular)});
    }
    return r;
}

CommandResult run_cartan_check(const std::vector<std::pair<char, int>>& types, const std::vector<int>& ells) {
    CommandResult r;
    r.command = "cartan-check";
    r.report.title = "cartan row sums";
    for (int ell : ells)
        for (const auto& [t, n] : types) {
            RowSumScan s = cartan_row_sum_check(cartan_datum(t, n, ell));
            std::string sums, zs;
            for (int x : s.plain_row_sums) sums += (sums.empty() ? "" : ",") + std::to_string(x);
            for (unsigned J : s.zero_subsets) zs += (zs.empty() ? "" : ";") + std::to_string(J);
            std::string name = s.label + "_l" + std::to_string(ell);
            std::string detail = "row_sums=(" + sums + ") zero_J={" + zs + "}";
            if (ell > 3)
                r.report.add(name, !s.any_all_zero(), "zero_J={" + zs + "}", "cartan.row_sums", detail);
            else
                r.report.add_status(name, Status::Skipped, "", "cartan.row_sums", detail + " (ell = 3 excluded)");
            r.facts.push_back({name, detail});
        }
    return r;
}

std::string render_text(const CommandResult& r) {
    std::ostringstream out;
    out << "hopfrob " << kVersion << " " << r.command;
    if (!r.input.empty()) out << " " << r.input << " [" << r.input_digest << "]";
    out << "\n" << r.report.text();
    if (!r.facts.empty()) {
        out << "facts:\n";
        for (const auto& [k, v] : r.facts) out << "  " << k << " = " << v << "\n";
    }
    int pass = 0, skipped = 0, fail = 0;
    for (const auto& c : r.report.checks)
        (c.status == Status::Pass ? pass : c.status == Status::Skipped ? skipped : fail)++;
    out << "summary: " << pass << " ok, " << skipped << " skipped, " << fail << " failed\n";
    return out.str();
}

std::string render_json(const CommandResult& r) {
    nlohmann::ordered_json j;
    j["tool"] = "hopfrob";
    j["version"] = kVersion;
    j["command"] = r.command;
    j["input"] = r.input;
    j["input_digest"] = r.input_digest;
    j["title"] = r.report.title;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.report.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = status_name(c.status);
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (!c.anchor.empty()) cj["anchor"] = c.anchor;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j["checks"].push_back(std::move(cj));
    }
    nlohmann::ordered_json facts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    j["facts"] = std::move(facts);
    j["all_pass"] = r.report.all_pass();
    return j.dump(2) + "\n";
}

}  // namespace hopfrob
