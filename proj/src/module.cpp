#include "hopfrob/module.hpp"

#include <stdexcept>

namespace hopfrob {

namespace {

void require_same(const HModule& m, const HModule& n) {
    if (m.over->dim != n.over->dim || m.over->name != n.over->name)
        throw std::invalid_argument("modules over different algebras: " + m.over->name + " vs " + n.over->name);
}

}  // namespace

Matrix HModule::act(const SparseVec& h) const {
    Matrix out(dim, dim);
    for (const auto& [a, c] : h) out = out + action[a].scaled(c);
    return out;
}

SparseVec HModule::act(const SparseVec& h, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [a, c] : h) axpy(out, c, action[a].apply(v));
    return out;
}

Report verify_module(const HModule& m) {
    const FinHopf& h = *m.over;
    if (static_cast<int>(m.action.size()) != h.dim)
        throw std::invalid_argument("module needs one action matrix per basis element");
    for (const auto& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim) throw std::invalid_argument("action matrix shape mismatch");
    Report rep;
    rep.title = "verify_module " + m.name;
    rep.add("unitality", m.act(h.unit).is_identity(), "unit", "module.axioms");
    auto bad = first_failure<int>(h.dim, [&](int a) -> std::optional<int> {
        for (int b = 0; b < h.dim; ++b)
            if (m.action[a] * m.action[b] != m.act(h.mul_basis(a, b))) return b;
        return std::nullopt;
    });
    rep.add("multiplicativity", !bad,
            bad ? "(" + h.labels[bad->first] + "," + h.labels[bad->second] + ")" : "", "module.axioms");
    return rep;
}

HModule character_module(const HopfPtr& h, const SparseVec& character, std::string name) {
    HModule m{h, 1, name.empty() ? "chi" : std::move(name), {}};
    for (int a = 0; a < h->dim; ++a) m.action.push_back(Matrix::scalar(coeff(character, a)));
    return m;
}

HModule trivial_module(const HopfPtr& h) { return character_module(h, h->counit, "trivial"); }

HModule regular_module(const HopfPtr& h) {
    HModule m{h, h->dim, "regular", {}};
    for (int a = 0; a < h->dim; ++a) m.action.push_back(h->left_mult_matrix(h->basis(a)));
    return m;
}

HModule module_from_generators(const HopfPtr& h, const std::vector<int>& gens, const std::vector<Matrix>& images,
                               std::string name) {
    if (gens.size() != images.size()) throw std::invalid_argument("one image per generator required");
    const int n = h->dim;
    const int d = images.empty() ? 0 : images[0].rows();
    // Monomials in the generators: element of H and its action matrix.
    std::vector<SparseVec> elems{h->unit};
    std::vector<Matrix> mats{Matrix::identity(d)};
    Echelon span(n);
    span.add(h->unit);
    std::vector<int> frontier{0};
    while (!frontier.empty() && !span.full()) {
        std::vector<int> next;
        for (int w : frontier)
            for (std::size_t g = 0; g < gens.size(); ++g) {
                SparseVec v = h->mul(h->basis(gens[g]), elems[w]);
                if (!span.add(v)) continue;
                elems.push_back(std::move(v));
                mats.push_back(images[g] * mats[w]);
                next.push_back(static_cast<int>(elems.size()) - 1);
            }
        frontier = std::move(next);
    }
    if (!span.full()) throw std::invalid_argument("generators do not span " + h->name);
    Matrix basis_change = Matrix::from_columns(n, elems);
    auto inv = inverse(basis_change);
    if (!inv) throw std::logic_error("monomial basis is singular");
    HModule m{h, d, name.empty() ? "module" : std::move(name), {}};
    for (int a = 0; a < n; ++a) {
        Matrix acc(d, d);
        for (const auto& [w, c] : inv->col(a)) acc = acc + mats[w].scaled(c);
        m.action.push_back(std::move(acc));
    }
    return m;
}

HModule direct_sum(const std::vector<HModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty direct sum");
    HModule m{parts[0].over, 0, "", {}};
    for (const auto& p : parts) {
        require_same(parts[0], p);
        m.dim += p.dim;
        m.name += (m.name.empty() ? "" : "+") + p.name;
    }
    for (int a = 0; a < m.over->dim; ++a) {
        Matrix acc(m.dim, m.dim);
        int off = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < p.dim; ++i)
                for (const auto& [j, c] : p.action[a].row(i)) acc.set(off + i, off + j, c);
            off += p.dim;
        }
        m.action.push_back(std::move(acc));
    }
    return m;
}

HModule tensor_modules(const HModule& m, const HModule& n) {
    require_same(m, n);
    const FinHopf& h = *m.over;
    HModule t{m.over, m.dim * n.dim, "(" + m.name + "(x)" + n.name + ")", {}};
    t.action.resize(h.dim);
    parallel_for(h.dim, [&](int a) {
        Matrix acc(t.dim, t.dim);
        for (const auto& [jk, c] : h.delta_basis(a)) acc = acc + kron(m.action[jk / h.dim], n.action[jk % h.dim]).scaled(c);
        t.action[a] = std::move(acc);
    });
    return t;
}

HModule restrict_module(const HopfInclusion& incl, const HModule& w) {
    if (w.over->dim != incl.H->dim) throw std::invalid_argument("module is not over the larger algebra");
    HModule r{incl.K, w.dim, "Res(" + w.name + ")", {}};
    for (const auto& col : incl.embed.columns()) r.action.push_back(w.act(col));
    return r;
}

bool is_module_map(const HModule& m, const HModule& n, const Matrix& f, std::string* witness) {
    require_same(m, n);
    if (f.rows() != n.dim || f.cols() != m.dim) throw std::invalid_argument("module map shape mismatch");
    for (int a = 0; a < m.over->dim; ++a)
        if (f * m.action[a] != n.action[a] * f) {
            if (witness) *witness = m.over->labels[a];
            return false;
        }
    return true;
}

std::vector<Matrix> hom_space(const HModule& m, const HModule& n) {
    require_same(m, n);
    const int dm = m.dim, dn = n.dim;
    // Unknown f_{ij} at index i * dm + j; equations (f A - B f)_{pq} = 0.
    std::vector<SparseVec> rows;
    Echelon ech(dn * dm);
    for (int a = 0; a < m.over->dim; ++a) {
        const Matrix& A = m.action[a];
        const Matrix& B = n.action[a];
        Matrix At = A.transpose();
        for (int p = 0; p < dn; ++p)
            for (int q = 0; q < dm; ++q) {
                std::vector<std::pair<int, Scalar>> raw;
                // (f A)_{pq} = sum_j f_{pj} A_{jq}
                for (const auto& [j, c] : At.row(q)) raw.emplace_back(p * dm + j, c);
                // (B f)_{pq} = sum_i B_{pi} f_{iq}
                for (const auto& [i, c] : B.row(p)) raw.emplace_back(i * dm + q, -c);
                SparseVec row = collect(std::move(raw));
                if (!row.empty()) ech.add(row);
            }
    }
    Matrix sys(ech.rank(), dn * dm);
    auto basis = ech.basis();
    for (int i = 0; i < ech.rank(); ++i) sys.set_row(i, basis[i]);
    std::vector<Matrix> out;
    for (const auto& v : null_space(sys)) {
        Matrix f(dn, dm);
        for (const auto& [idx, c] : v) f.set(idx / dm, idx % dm, c);
        out.push_back(std::move(f));
    }
    return out;
}

IsoResult is_isomorphic(const HModule& m, const HModule& n, int bound) {
    require_same(m, n);
    IsoResult res;
    if (m.dim != n.dim) {
        res.method = "dimension";
        return res;
    }
    auto hom = hom_space(m, n);
    if (hom.empty()) {
        res.method = "empty hom space";
        return res;
    }
    auto invertible = [&](const Matrix& f) { return rank(f) == m.dim; };
    auto found = [&](Matrix f, const char* how) {
        res.status = IsoStatus::Isomorphic;
        res.map = std::move(f);
        res.method = how;
        return res;
    };
    for (const auto& f : hom)
        if (invertible(f)) return found(f, "basis");
    Matrix acc(m.dim, m.dim);
    for (const auto& f : hom) {
        acc = acc + f;
        if (invertible(acc)) return found(acc, "prefix");
    }
    // Lexicographic grid over coefficient vectors; capped to keep the search bounded.
    const int k = static_cast<int>(hom.size());
    const long long cap = 200000;
    std::vector<int> coef(k, -bound);
    for (long long tries = 0; tries < cap; ++tries) {
        Matrix f(m.dim, m.dim);
        for (int i = 0; i < k; ++i)
            if (coef[i] != 0) f = f + hom[i].scaled(Scalar(coef[i]));
        if (invertible(f)) return found(f, "grid");
        int i = k - 1;
        while (i >= 0 && coef[i] == bound) coef[i--] = -bound;
        if (i < 0) break;
        ++coef[i];
    }
    res.status = IsoStatus::Undetermined;
    res.method = "no invertible element within grid bound " + std::to_string(bound);
    return res;
}

HModule h8_v1(const HopfPtr& h8, int b_power) {
    Scalar b = root_of_unity(4, b_power);
    Scalar b2 = b * b;
    const int x = h8->index_of("x"), y = h8->index_of("y"), z = h8->index_of("z");
    static const char* names[4] = {"V1(1)", "V1(i)", "V1(-1)", "V1(-i)"};
    return module_from_generators(h8, {x, y, z}, {Matrix::scalar(b2), Matrix::scalar(b2), Matrix::scalar(b)},
                                  names[((b_power % 4) + 4) % 4]);
}

HModule h8_v2(const HopfPtr& h8) {
    const int x = h8->index_of("x"), y = h8->index_of("y"), z = h8->index_of("z");
    auto m = [](int a, int b, int c, int d) { return Matrix::from_dense({{Scalar(a), Scalar(b)}, {Scalar(c), Scalar(d)}}); };
    // Columns are images: z v1 = v1, z v2 = -v2, x v1 = -v2, y v1 = v2, x^2 = y^2 = 1.
    return module_from_generators(h8, {x, y, z}, {m(0, -1, -1, 0), m(0, 1, 1, 0), m(1, 0, 0, -1)}, "V2");
}

HModule klein_character(const HopfPtr& kk, int ex, int ey) {
    SparseVec chi;
    const int x = kk->index_of("x"), y = kk->index_of("y"), xy = kk->index_of("xy");
    const int sx = ex > 0 ? 1 : -1, sy = ey > 0 ? 1 : -1;
    std::vector<std::pair<int, Scalar>> raw = {{0, Scalar(1)}, {x, Scalar(sx)}, {y, Scalar(sy)}, {xy, Scalar(sx * sy)}};
    return character_module(kk, collect(std::move(raw)),
                            "k(" + std::to_string(sx) + "," + std::to_string(sy) + ")");
}

std::vector<HModule> group_characters(const HopfPtr& h) {
    const int n = h->dim;
    // Group table from the multiplication; every basis element must be grouplike.
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        if (h->delta_basis(a) != unit_vec(a * n + a)) return {};
        for (int b = 0; b < n; ++b) {
            const SparseVec& p = h->mul_basis(a, b);
            if (p.size() != 1 || !p[0].second.is_one()) return {};
            table[a][b] = p[0].first;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a][b] != table[b][a]) return {};
    auto order = [&](int g) {
        int k = 1;
        for (int x = g; x != 0; x = table[x][g]) ++k;
        return k;
    };
    int exponent = 1;
    for (int g = 0; g < n; ++g) exponent = lcm_int(exponent, order(g));
    // Greedy generators; every element gets a word in them.
    std::vector<int> gens;
    std::vector<std::vector<int>> word(n);
    std::vector<bool> reached(n, false);
    reached[0] = true;
    word[0] = {};
    for (int g = 1; g < n; ++g) {
        if (reached[g]) continue;
        gens.push_back(g);
        std::vector<int> frontier;
        for (int x = 0; x < n; ++x)
            if (reached[x]) frontier.push_back(x);
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            int y = table[frontier[i]][g];
            if (reached[y]) continue;
            reached[y] = true;
            word[y] = word[frontier[i]];
            word[y].resize(gens.size(), 0);
            ++word[y][gens.size() - 1];
            frontier.push_back(y);
        }
    }
    std::vector<HModule> out;
    std::vector<int> choice(gens.size(), 0);
    for (;;) {
        std::vector<std::pair<int, Scalar>> raw;
        for (int g = 0; g < n; ++g) {
            long long e = 0;
            for (std::size_t i = 0; i < word[g].size(); ++i) e += static_cast<long long>(word[g][i]) * choice[i];
            raw.emplace_back(g, root_of_unity(exponent, e % exponent));
        }
        SparseVec chi = collect(std::move(raw));
        if (is_algebra_map(*h, chi)) {
            std::string name = "chi(";
            for (std::size_t i = 0; i < choice.size(); ++i) name += (i ? "," : "") + std::to_string(choice[i]);
            out.push_back(character_module(h, chi, name + ")"));
        }
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == exponent) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    return out;
}

}  // namespace hopfrob
