#include "hopfrob/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "hopfrob/builders.hpp"

namespace hopfrob {

InputError::InputError(std::string src, int ln, int col, const std::string& msg)
    : std::runtime_error(src + (ln > 0 ? ":" + std::to_string(ln) + ":" + std::to_string(col) : "") + ": " + msg),
      source(std::move(src)),
      line(ln),
      column(col) {}

HopfPtr Document::find_hopf(const std::string& name) const {
    for (const auto& h : hopfs)
        if (h->name == name) return h;
    return nullptr;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

struct Entry {
    std::vector<int> index;
    std::vector<int> cols;  // 1-based column of each index
    Scalar value;
};

// One block under construction.  Sections hold entries in file order.
struct Block {
    std::string kind, name;
    int line = 0;
    std::map<std::string, std::string> fields;  // DIM, CONDUCTOR, SMALL, LARGE, OVER, LABELS
    std::vector<std::string> conventions;
    std::vector<std::pair<std::string, std::vector<std::pair<Entry, int>>>> sections;  // entry and its line
};

class Parser {
public:
    Parser(std::string_view text, std::string source) : text_(text), src_(std::move(source)) {}

    Document run() {
        std::istringstream in{std::string(text_)};
        std::string raw;
        int ln = 0;
        std::unique_ptr<Block> blk;
        while (std::getline(in, raw)) {
            ++ln;
            std::string line = trim(raw);
            if (line.empty() || line[0] == '#') continue;
            int col = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
            if (line[0] == '(') {
                if (!blk || blk->sections.empty()) fail(ln, col, "entry outside a section");
                blk->sections.back().second.push_back({entry(line, ln, col), ln});
                continue;
            }
            std::istringstream words(line);
            std::string key, rest;
            words >> key;
            std::getline(words, rest);
            rest = trim(rest);
            if (key == "HOPF" || key == "INCLUSION" || key == "MODULE") {
                if (blk) fail(ln, col, "missing END before " + key);
                if (rest.empty()) fail(ln, col, key + " needs a name");
                blk = std::make_unique<Block>();
                blk->kind = key;
                blk->name = rest;
                blk->line = ln;
                conductor_ = 1;
                continue;
            }
            if (!blk) fail(ln, col, "'" + key + "' outside a block");
            if (key == "END") {
                finish(*blk);
                blk.reset();
            } else if (key == "DIM" || key == "CONDUCTOR" || key == "LABELS" || key == "SMALL" || key == "LARGE" ||
                       key == "OVER") {
                blk->fields[key] = rest;
                if (key == "CONDUCTOR") conductor_ = lcm_int(conductor_, to_int(rest, ln, col + 10));
                if (key == "OVER") {
                    HopfPtr h = doc_.find_hopf(rest);
                    if (!h) fail(ln, col, "unknown algebra '" + rest + "'");
                    conductor_ = lcm_int(conductor_, h->conductor);
                }
            } else if (key == "CONVENTION") {
                blk->conventions.push_back(rest);
            } else if (key == "MULT" || key == "COMULT" || key == "UNIT" || key == "COUNIT" || key == "ANTIPODE" ||
                       key == "EMBED" || key == "COACTION") {
                blk->sections.push_back({key, {}});
            } else if (key == "ACTION") {
                blk->sections.push_back({"ACTION " + rest, {}});
            } else {
                fail(ln, col, "unknown keyword '" + key + "'");
            }
        }
        if (blk) fail(blk->line, 1, "block '" + blk->name + "' is not closed by END");
        return std::move(doc_);
    }

private:
    [[noreturn]] void fail(int ln, int col, const std::string& msg) const { throw InputError(src_, ln, col, msg); }

    int to_int(const std::string& s, int ln, int col) const {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            fail(ln, col, "expected an integer, got '" + s + "'");
        }
    }

    Entry entry(const std::string& line, int ln, int col) const {
        auto close = line.find(')');
        if (close == std::string::npos) fail(ln, col, "unterminated index tuple");
        Entry e;
        std::string inner = line.substr(1, close - 1);
        std::istringstream parts(inner);
        std::string tok;
        int off = col + 1;
        while (std::getline(parts, tok, ',')) {
            int lead = static_cast<int>(tok.find_first_not_of(" \t"));
            e.cols.push_back(off + std::max(lead, 0));
            e.index.push_back(to_int(trim(tok), ln, e.cols.back()));
            off += static_cast<int>(tok.size()) + 1;
        }
        std::string value = trim(line.substr(close + 1));
        if (value.empty()) fail(ln, col + static_cast<int>(close) + 1, "missing scalar");
        try {
            e.value = Scalar::parse(value, conductor_);
        } catch (const std::exception& ex) {
            fail(ln, col + static_cast<int>(close) + 2, std::string("bad scalar: ") + ex.what());
        }
        return e;
    }

    void check_index(const Entry& e, const std::vector<int>& bounds, int ln, const std::string& section) const {
        if (e.index.size() != bounds.size())
            fail(ln, e.cols.empty() ? 1 : e.cols[0] - 1, section + " entries need " + std::to_string(bounds.size()) + " indices");
        for (std::size_t i = 0; i < bounds.size(); ++i)
            if (e.index[i] < 0 || e.index[i] >= bounds[i])
                fail(ln, e.cols[i], section + " index " + std::to_string(e.index[i]) + " out of range [0," +
                                std::to_string(bounds[i]) + ")");
    }

    int field_int(const Block& b, const std::string& key) const {
        auto it = b.fields.find(key);
        if (it == b.fields.end()) fail(b.line, 1, b.kind + " '" + b.name + "' needs " + key);
        return to_int(it->second, b.line, 1);
    }

    HopfPtr field_hopf(const Block& b, const std::string& key) const {
        auto it = b.fields.find(key);
        if (it == b.fields.end()) fail(b.line, 1, b.kind + " '" + b.name + "' needs " + key);
        HopfPtr h = doc_.find_hopf(it->second);
        if (!h) fail(b.line, 1, "unknown algebra '" + it->second + "'");
        return h;
    }

    void finish(const Block& b) {
        if (b.kind == "HOPF") finish_hopf(b);
        else if (b.kind == "INCLUSION") finish_inclusion(b);
        else finish_module(b);
    }

    void finish_hopf(const Block& b) {
        FinHopf h;
        h.name = b.name;
        h.dim = field_int(b, "DIM");
        if (h.dim <= 0) fail(b.line, 1, "DIM must be positive");
        h.conductor = b.fields.count("CONDUCTOR") ? field_int(b, "CONDUCTOR") : 1;
        h.conventions = b.conventions;
        const int n = h.dim;
        if (auto it = b.fields.find("LABELS"); it != b.fields.end()) {
            std::istringstream ls(it->second);
            std::string l;
            while (ls >> l) h.labels.push_back(l);
            if (static_cast<int>(h.labels.size()) != n) fail(b.line, 1, "LABELS must list DIM labels");
        } else {
            for (int a = 0; a < n; ++a) h.labels.push_back("e" + std::to_string(a));
        }
        h.mult = SparseTensor({n, n, n}, 2);
        h.comult = SparseTensor({n, n, n}, 1);
        std::vector<std::pair<int, Scalar>> unit, counit;
        h.antipode = Matrix(n, n);
        for (const auto& [sec, entries] : b.sections)
            for (const auto& [e, ln] : entries) {
                if (sec == "MULT" || sec == "COMULT") {
                    check_index(e, {n, n, n}, ln, sec);
                    (sec == "MULT" ? h.mult : h.comult).add(e.index, e.value);
                } else if (sec == "UNIT" || sec == "COUNIT") {
                    check_index(e, {n}, ln, sec);
                    (sec == "UNIT" ? unit : counit).emplace_back(e.index[0], e.value);
                } else if (sec == "ANTIPODE") {
                    check_index(e, {n, n}, ln, sec);
                    h.antipode.add_to(e.index[1], e.index[0], e.value);
                } else {
                    fail(ln, 1, sec + " is not a HOPF section");
                }
            }
        h.unit = collect(std::move(unit));
        h.counit = collect(std::move(counit));
        try {
            check_shape(h);
        } catch (const std::exception& ex) {
            fail(b.line, 1, ex.what());
        }
        if (doc_.find_hopf(h.name)) fail(b.line, 1, "duplicate algebra '" + h.name + "'");
        doc_.hopfs.push_back(std::make_shared<const FinHopf>(std::move(h)));
    }

    void finish_inclusion(const Block& b) {
        HopfInclusion incl;
        incl.name = b.name;
        incl.K = field_hopf(b, "SMALL");
        incl.H = field_hopf(b, "LARGE");
        incl.embed = Matrix(incl.H->dim, incl.K->dim);
        for (const auto& [sec, entries] : b.sections)
            for (const auto& [e, ln] : entries) {
                if (sec != "EMBED") fail(ln, 1, sec + " is not an INCLUSION section");
                check_index(e, {incl.H->dim, incl.K->dim}, ln, sec);
                incl.embed.add_to(e.index[0], e.index[1], e.value);
            }
        doc_.inclusions.push_back(std::move(incl));
    }

    void finish_module(const Block& b) {
        HopfPtr h = field_hopf(b, "OVER");
        const int d = field_int(b, "DIM");
        if (d <= 0) fail(b.line, 1, "DIM must be positive");
        std::map<int, Matrix> given;
        std::optional<Matrix> co;
        for (const auto& [sec, entries] : b.sections) {
            if (sec == "COACTION") {
                co = Matrix(h->dim * d, d);
                for (const auto& [e, ln] : entries) {
                    check_index(e, {h->dim, d, d}, ln, sec);
                    co->add_to(e.index[0] * d + e.index[1], e.index[2], e.value);
                }
                continue;
            }
            if (sec.rfind("ACTION ", 0) != 0) fail(b.line, 1, sec + " is not a MODULE section");
            std::string label = sec.substr(7);
            int idx = -1;
            for (int a = 0; a < h->dim; ++a)
                if (h->labels[a] == label) idx = a;
            if (idx < 0) fail(b.line, 1, "unknown basis label '" + label + "' of " + h->name);
            Matrix m(d, d);
            for (const auto& [e, ln] : entries) {
                check_index(e, {d, d}, ln, "ACTION");
                m.add_to(e.index[0], e.index[1], e.value);
            }
            given[idx] = std::move(m);
        }
        HModule mod;
        if (static_cast<int>(given.size()) == h->dim) {
            mod = HModule{h, d, b.name, {}};
            for (auto& [a, m] : given) mod.action.push_back(std::move(m));
        } else {
            std::vector<int> gens;
            std::vector<Matrix> images;
            for (auto& [a, m] : given) {
                gens.push_back(a);
                images.push_back(std::move(m));
            }
            try {
                mod = module_from_generators(h, gens, images, b.name);
            } catch (const std::exception& ex) {
                fail(b.line, 1, ex.what());
            }
        }
        if (co) doc_.yd_modules.push_back({mod, *co});
        doc_.modules.push_back(std::move(mod));
    }

    std::string_view text_;
    std::string src_;
    int conductor_ = 1;
    Document doc_;
};

std::string scalar_text(const Scalar& s, int conductor) { return s.lift(lcm_int(conductor, s.conductor())).str(); }

int required_conductor(int base, const std::vector<const Matrix*>& ms) {
    int n = base;
    for (const Matrix* m : ms)
        for (int i = 0; i < m->rows(); ++i)
            for (const auto& [j, c] : m->row(i)) n = lcm_int(n, c.conductor());
    return n;
}

}  // namespace

Document parse_document(std::string_view text, const std::string& source) { return Parser(text, source).run(); }

std::string write_hopf(const FinHopf& h) {
    const int n = h.dim;
    int N = h.conductor;
    auto widen = [&](const SparseVec& v) {
        for (const auto& [i, c] : v) N = lcm_int(N, c.conductor());
    };
    for (int a = 0; a < n * n; ++a) widen(h.mult.fiber(a));
    for (int a = 0; a < n; ++a) widen(h.comult.fiber(a));
    widen(h.unit);
    widen(h.counit);
    N = required_conductor(N, {&h.antipode});
    std::ostringstream out;
    out << "HOPF " << h.name << "\nDIM " << n << "\nCONDUCTOR " << N << "\nLABELS";
    for (const auto& l : h.labels) out << ' ' << l;
    out << '\n';
    for (const auto& c : h.conventions) out << "CONVENTION " << c << '\n';
    out << "MULT\n";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (const auto& [k, c] : h.mult.fiber(a * n + b))
                out << '(' << a << ',' << b << ',' << k << ") " << scalar_text(c, N) << '\n';
    out << "COMULT\n";
    for (int a = 0; a < n; ++a)
        for (const auto& [jk, c] : h.comult.fiber(a))
            out << '(' << a << ',' << jk / n << ',' << jk % n << ") " << scalar_text(c, N) << '\n';
    out << "UNIT\n";
    for (const auto& [i, c] : h.unit) out << '(' << i << ") " << scalar_text(c, N) << '\n';
    out << "COUNIT\n";
    for (const auto& [i, c] : h.counit) out << '(' << i << ") " << scalar_text(c, N) << '\n';
    out << "ANTIPODE\n";
    for (int i = 0; i < n; ++i)
        for (const auto& [j, c] : h.antipode.col(i)) out << '(' << i << ',' << j << ") " << scalar_text(c, N) << '\n';
    out << "END\n";
    return out.str();
}

std::string write_inclusion(const HopfInclusion& incl) {
    std::ostringstream out;
    out << write_hopf(*incl.K) << write_hopf(*incl.H);
    out << "INCLUSION " << incl.name << "\nSMALL " << incl.K->name << "\nLARGE " << incl.H->name << "\nEMBED\n";
    const int N = required_conductor(incl.H->conductor, {&incl.embed});
    for (int i = 0; i < incl.embed.rows(); ++i)
        for (const auto& [a, c] : incl.embed.row(i)) out << '(' << i << ',' << a << ") " << scalar_text(c, N) << '\n';
    out << "END\n";
    return out.str();
}

std::string write_module(const HModule& m, const Matrix* coaction) {
    const FinHopf& h = *m.over;
    std::vector<const Matrix*> ms;
    for (const auto& a : m.action) ms.push_back(&a);
    if (coaction) ms.push_back(coaction);
    const int N = required_conductor(h.conductor, ms);
    std::ostringstream out;
    out << "MODULE " << m.name << "\nOVER " << h.name << "\nDIM " << m.dim << '\n';
    if (N != h.conductor) out << "CONDUCTOR " << N << '\n';
    for (int a = 0; a < h.dim; ++a) {
        out << "ACTION " << h.labels[a] << '\n';
        for (int i = 0; i < m.dim; ++i)
            for (const auto& [j, c] : m.action[a].row(i)) out << '(' << i << ',' << j << ") " << scalar_text(c, N) << '\n';
    }
    if (coaction) {
        out << "COACTION\n";
        for (int r = 0; r < coaction->rows(); ++r)
            for (const auto& [j, c] : coaction->row(r))
                out << '(' << r / m.dim << ',' << r % m.dim << ',' << j << ") " << scalar_text(c, N) << '\n';
    }
    out << "END\n";
    return out.str();
}

namespace {

std::map<std::string, std::string> query_params(const std::string& spec, const std::string& q) {
    std::map<std::string, std::string> out;
    std::istringstream in(q);
    std::string kv;
    while (std::getline(in, kv, '&')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw InputError(spec, 0, 0, "malformed parameter '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

int param_int(const std::string& spec, const std::map<std::string, std::string>& p, const std::string& key, int dflt) {
    auto it = p.find(key);
    if (it == p.end()) {
        if (dflt < 0) throw InputError(spec, 0, 0, "missing parameter '" + key + "'");
        return dflt;
    }
    try {
        std::size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used == it->second.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(spec, 0, 0, "parameter '" + key + "' must be an integer");
}

Document from_inclusion(const HopfInclusion& incl) {
    Document d;
    d.hopfs = {incl.K, incl.H};
    d.inclusions = {incl};
    return d;
}

HopfPtr double_source(const std::string& spec, const std::string& of) {
    if (of == "c2") return cyclic_group_algebra(2);
    if (of == "cyclic3") return cyclic_group_algebra(3);
    if (of == "klein") return klein_four();
    if (of == "h8") return kac_paljutkin();
    Document inner = load_input(of);
    if (inner.hopfs.empty()) throw InputError(spec, 0, 0, "'" + of + "' defines no algebra");
    return inner.hopfs.back();
}

std::vector<std::vector<int>> parse_table(const std::string& spec, const std::string& t) {
    std::vector<std::vector<int>> table;
    std::istringstream rows(t);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<int> r;
        std::istringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                r.push_back(std::stoi(cell));
            } catch (const std::exception&) {
                throw InputError(spec, 0, 0, "table entry '" + cell + "' is not an integer");
            }
        }
        table.push_back(std::move(r));
    }
    return table;
}

Document load_builtin(const std::string& spec) {
    std::string body = spec.substr(8);
    auto qm = body.find('?');
    std::string kind = body.substr(0, qm);
    auto p = qm == std::string::npos ? std::map<std::string, std::string>{} : query_params(spec, body.substr(qm + 1));
    try {
        if (kind == "h8") return from_inclusion(kac_paljutkin_inclusion());
        if (kind == "klein") return from_inclusion(unit_inclusion(klein_four()));
        if (kind == "cyclic") return from_inclusion(unit_inclusion(cyclic_group_algebra(param_int(spec, p, "n", -1))));
        if (kind == "group") {
            auto it = p.find("table");
            if (it == p.end()) throw InputError(spec, 0, 0, "missing parameter 'table'");
            return from_inclusion(unit_inclusion(group_algebra(parse_table(spec, it->second))));
        }
        if (kind == "taft") return from_inclusion(taft_inclusion(param_int(spec, p, "l", -1), param_int(spec, p, "q", 1)));
        if (kind == "uqsl2") {
            int l = param_int(spec, p, "l", -1);
            std::string sub = p.count("sub") ? p.at("sub") : "cartan";
            HopfPtr u = small_quantum_sl2(l);
            if (sub == "cartan") return from_inclusion(sl2_cartan(u, l));
            if (sub == "borel+") return from_inclusion(sl2_borel_plus(u, l));
            if (sub == "borel-") return from_inclusion(sl2_borel_minus(u, l));
            if (sub == "full") return from_inclusion(identity_inclusion(u));
            throw InputError(spec, 0, 0, "unknown sub '" + sub + "'");
        }
        if (kind == "double") {
            auto it = p.find("of");
            if (it == p.end()) throw InputError(spec, 0, 0, "missing parameter 'of'");
            return from_inclusion(drinfeld_double(double_source(spec, it->second)));
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& ex) {
        throw InputError(spec, 0, 0, ex.what());
    }
    throw InputError(spec, 0, 0, "unknown builtin '" + kind + "'");
}

}  // namespace

Document load_input(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return load_builtin(spec);
    std::ifstream in(spec);
    if (!in) throw InputError(spec, 0, 0, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), spec);
}

}  // namespace hopfrob
