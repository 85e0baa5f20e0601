#include "hopfrob/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfrob {

SparseVec collect(std::vector<std::pair<int, Scalar>> raw) {
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(raw.size());
    for (auto& [i, c] : raw) {
        if (!out.empty() && out.back().first == i) {
            out.back().second += c;
        } else {
            if (!out.empty() && out.back().second.is_zero()) out.pop_back();
            out.emplace_back(i, std::move(c));
        }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    return out;
}

Scalar evaluate(const SparseVec& functional, const SparseVec& x) {
    Scalar s(0);
    std::size_t i = 0, j = 0;
    while (i < functional.size() && j < x.size()) {
        if (functional[i].first < x[j].first) {
            ++i;
        } else if (x[j].first < functional[i].first) {
            ++j;
        } else {
            s += functional[i].second * x[j].second;
            ++i;
            ++j;
        }
    }
    return s;
}

int FinHopf::index_of(const std::string& label) const {
    for (int a = 0; a < dim; ++a)
        if (labels[a] == label) return a;
    throw std::out_of_range("no basis element labelled '" + label + "' in " + name);
}

std::string FinHopf::element_str(const SparseVec& x) const {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : x) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")" + labels[i];
    }
    return out;
}

SparseVec FinHopf::mul(const SparseVec& x, const SparseVec& y) const {
    std::vector<std::pair<int, Scalar>> raw;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Scalar c = ca * cb;
            for (const auto& [k, ck] : mul_basis(a, b)) raw.emplace_back(k, c * ck);
        }
    return collect(std::move(raw));
}

SparseVec FinHopf::mul(const std::vector<SparseVec>& factors) const {
    SparseVec acc = unit;
    for (const auto& f : factors) acc = mul(acc, f);
    return acc;
}

SparseVec FinHopf::delta(const SparseVec& x) const {
    std::vector<std::pair<int, Scalar>> raw;
    for (const auto& [a, ca] : x)
        for (const auto& [jk, c] : delta_basis(a)) raw.emplace_back(jk, ca * c);
    return collect(std::move(raw));
}

SparseVec FinHopf::delta2(const SparseVec& x) const {
    std::vector<std::pair<int, Scalar>> raw;
    for (const auto& [jk, c] : delta(x)) {
        int j = jk / dim, k = jk % dim;
        for (const auto& [pq, d] : delta_basis(j)) raw.emplace_back(pq * dim + k, c * d);
    }
    return collect(std::move(raw));
}

SparseVec FinHopf::mul2(const SparseVec& x, const SparseVec& y) const {
    std::vector<std::pair<int, Scalar>> raw;
    for (const auto& [ab, c1] : x) {
        int a = ab / dim, b = ab % dim;
        for (const auto& [de, c2] : y) {
            int d = de / dim, e = de % dim;
            Scalar c = c1 * c2;
            const SparseVec& l = mul_basis(a, d);
            const SparseVec& r = mul_basis(b, e);
            for (const auto& [p, cp] : l)
                for (const auto& [q, cq] : r) raw.emplace_back(p * dim + q, c * cp * cq);
        }
    }
    return collect(std::move(raw));
}

SparseVec FinHopf::tensor2(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.emplace_back(a * dim + b, ca * cb);
    return out;
}

Matrix FinHopf::left_mult_matrix(const SparseVec& x) const {
    std::vector<SparseVec> cols(dim);
    for (int b = 0; b < dim; ++b) cols[b] = mul(x, basis(b));
    return Matrix::from_columns(dim, cols);
}

Matrix FinHopf::right_mult_matrix(const SparseVec& x) const {
    std::vector<SparseVec> cols(dim);
    for (int b = 0; b < dim; ++b) cols[b] = mul(basis(b), x);
    return Matrix::from_columns(dim, cols);
}

void check_shape(const FinHopf& h) {
    const int n = h.dim;
    if (n <= 0) throw std::invalid_argument("Hopf algebra dimension must be positive");
    if (static_cast<int>(h.labels.size()) != n) throw std::invalid_argument("label count differs from dim");
    if (h.mult.shape() != std::vector<int>{n, n, n} || h.mult.split() != 2)
        throw std::invalid_argument("multiplication tensor shape mismatch");
    if (h.comult.shape() != std::vector<int>{n, n, n} || h.comult.split() != 1)
        throw std::invalid_argument("comultiplication tensor shape mismatch");
    if (h.antipode.rows() != n || h.antipode.cols() != n) throw std::invalid_argument("antipode shape mismatch");
    for (const auto& [i, c] : h.unit)
        if (i < 0 || i >= n) throw std::invalid_argument("unit index out of range");
    for (const auto& [i, c] : h.counit)
        if (i < 0 || i >= n) throw std::invalid_argument("counit index out of range");
    for (int g : h.generators)
        if (g < 0 || g >= n) throw std::invalid_argument("generator index out of range");
}

namespace {

std::string witness_of(const FinHopf& h, const std::vector<int>& idx) {
    std::string a = "(", b = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) {
            a += ",";
            b += ",";
        }
        a += std::to_string(idx[k]);
        b += h.labels[idx[k]];
    }
    return a + ")=" + b + ")";
}

// (id (x) Delta) Delta
SparseVec delta2_right(const FinHopf& h, const SparseVec& x) {
    std::vector<std::pair<int, Scalar>> raw;
    const int n = h.dim;
    for (const auto& [jk, c] : h.delta(x)) {
        int j = jk / n, k = jk % n;
        for (const auto& [pq, d] : h.delta_basis(k)) raw.emplace_back(j * n * n + pq, c * d);
    }
    return collect(std::move(raw));
}

bool generators_span(const FinHopf& h) {
    Echelon ech(h.dim);
    std::vector<SparseVec> frontier{h.unit};
    ech.add(h.unit);
    while (!frontier.empty() && !ech.full()) {
        std::vector<SparseVec> next;
        for (const auto& w : frontier)
            for (int g : h.generators) {
                SparseVec v = h.mul(w, h.basis(g));
                if (ech.add(v)) next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    return ech.full();
}

}  // namespace

Report verify_hopf(const FinHopf& h, Exec exec, bool force_exhaustive) {
    check_shape(h);
    const int n = h.dim;
    Report rep;
    rep.title = "verify_hopf " + h.name;
    bool exhaustive = force_exhaustive || n <= 64 || h.generators.empty();
    std::vector<int> right_factors;
    if (exhaustive) {
        for (int c = 0; c < n; ++c) right_factors.push_back(c);
    } else {
        bool spans = generators_span(h);
        rep.add("generators_span", spans, spans ? "" : "generators", "hopf.axioms");
        if (!spans) {
            exhaustive = true;
            for (int c = 0; c < n; ++c) right_factors.push_back(c);
        } else {
            right_factors = h.generators;
        }
    }
    const int nr = static_cast<int>(right_factors.size());

    using W = std::vector<int>;
    auto assoc = first_failure<W>(
        n,
        [&](int a) -> std::optional<W> {
            for (int b = 0; b < n; ++b) {
                const SparseVec& ab = h.mul_basis(a, b);
                for (int c : right_factors) {
                    SparseVec lhs = h.mul(ab, h.basis(c));
                    SparseVec rhs = h.mul(h.basis(a), h.mul_basis(b, c));
                    if (lhs != rhs) return W{a, b, c};
                }
            }
            return std::nullopt;
        },
        exec);
    rep.add("associativity", !assoc, assoc ? witness_of(h, assoc->second) : "", "hopf.axioms");

    auto unital = first_failure<W>(
        n,
        [&](int a) -> std::optional<W> {
            SparseVec e = h.basis(a);
            if (h.mul(h.unit, e) != e || h.mul(e, h.unit) != e) return W{a};
            return std::nullopt;
        },
        exec);
    rep.add("unitality", !unital, unital ? witness_of(h, unital->second) : "", "hopf.axioms");

    auto coassoc = first_failure<W>(
        n,
        [&](int a) -> std::optional<W> {
            if (h.delta2(h.basis(a)) != delta2_right(h, h.basis(a))) return W{a};
            return std::nullopt;
        },
        exec);
    rep.add("coassociativity", !coassoc, coassoc ? witness_of(h, coassoc->second) : "", "hopf.axioms");

    auto counital = first_failure<W>(
        n,
        [&](int a) -> std::optional<W> {
            std::vector<std::pair<int, Scalar>> left, right;
            for (const auto& [jk, c] : h.delta_basis(a)) {
                int j = jk / n, k = jk % n;
                Scalar ej = coeff(h.counit, j), ek = coeff(h.counit, k);
                if (!ej.is_zero()) left.emplace_back(k, c * ej);
                if (!ek.is_zero()) right.emplace_back(j, c * ek);
            }
            SparseVec e = h.basis(a);
            if (collect(left) != e || collect(right) != e) return W{a};
            return std::nullopt;
        },
        exec);
    rep.add("counitality", !counital, counital ? witness_of(h, counital->second) : "", "hopf.axioms");

    auto comult_mult = first_failure<W>(
        n,
        [&](int a) -> std::optional<W> {
            SparseVec da = h.delta_basis(a);
            for (int k = 0; k < nr; ++k) {
                int b = right_factors[k];
                if (h.delta(h.mul_basis(a, b)) != h.mul2(da, h.delta_basis(b))) return W{a, b};
            }
            return std::nullopt;
        },
        exec);
    rep.add("comult_multiplicative", !comult_mult, comult_mult ? witness_of(h, comult_mult->second) : "",
            "hopf.axioms");
    rep.add("comult_unital", h.delta(h.unit) == h.tensor2(h.unit, h.unit), "unit", "hopf.axioms");

    auto counit_mult = first_failure<W>(
        n,
        [&](int a) -> std::optional<W> {
            Scalar ea = coeff(h.counit, a);
            for (int b : right_factors)
                if (h.eps(h.mul_basis(a, b)) != ea * coeff(h.counit, b)) return W{a, b};
            return std::nullopt;
        },
        exec);
    rep.add("counit_multiplicative", !counit_mult, counit_mult ? witness_of(h, counit_mult->second) : "",
            "hopf.axioms");
    rep.add("counit_unital", h.eps(h.unit).is_one(), "unit", "hopf.axioms");

    auto scols = h.antipode.columns();
    auto anti = first_failure<W>(
        n,
        [&](int a) -> std::optional<W> {
            SparseVec expect = scaled(h.unit, coeff(h.counit, a));
            std::vector<std::pair<int, Scalar>> left, right;
            for (const auto& [jk, c] : h.delta_basis(a)) {
                int j = jk / n, k = jk % n;
                for (const auto& [p, cp] : h.mul(scols[j], h.basis(k))) left.emplace_back(p, c * cp);
                for (const auto& [p, cp] : h.mul(h.basis(j), scols[k])) right.emplace_back(p, c * cp);
            }
            if (collect(left) != expect || collect(right) != expect) return W{a};
            return std::nullopt;
        },
        exec);
    rep.add("antipode", !anti, anti ? witness_of(h, anti->second) : "", "hopf.axioms");
    int rs = rank(h.antipode);
    rep.add("antipode_invertible", rs == n, rs == n ? "" : "rank=" + std::to_string(rs), "hopf.axioms");
    return rep;
}

Matrix antipode_inverse(const FinHopf& h) {
    auto inv = inverse(h.antipode);
    if (!inv) throw std::runtime_error("singular antipode: input is not a Hopf algebra");
    return *inv;
}

FinHopf dual_hopf(const FinHopf& h) {
    const int n = h.dim;
    FinHopf d;
    d.name = h.name + "*";
    d.dim = n;
    d.conductor = h.conductor;
    for (const auto& l : h.labels) d.labels.push_back("d[" + l + "]");
    d.mult = SparseTensor({n, n, n}, 2);
    d.comult = SparseTensor({n, n, n}, 1);
    std::vector<std::vector<std::pair<int, Scalar>>> mfib(n * n);
    for (int i = 0; i < n; ++i)
        for (const auto& [jk, c] : h.delta_basis(i)) mfib[jk].emplace_back(i, c);
    for (int jk = 0; jk < n * n; ++jk) d.mult.set_fiber(jk, collect(std::move(mfib[jk])));
    std::vector<std::vector<std::pair<int, Scalar>>> cfib(n);
    for (int ab = 0; ab < n * n; ++ab)
        for (const auto& [i, c] : h.mult.fiber(ab)) cfib[i].emplace_back(ab, c);
    for (int i = 0; i < n; ++i) d.comult.set_fiber(i, collect(std::move(cfib[i])));
    d.unit = h.counit;
    d.counit = h.unit;
    d.antipode = h.antipode.transpose();
    d.conventions = h.conventions;
    d.conventions.push_back("dual");
    return d;
}

std::vector<SparseVec> integral_space(const FinHopf& h, Side side) {
    const int n = h.dim;
    std::vector<int> probes = h.generators;
    if (probes.empty())
        for (int i = 0; i < n; ++i) probes.push_back(i);
    std::vector<Matrix> blocks;
    for (int i : probes) {
        std::vector<SparseVec> cols(n);
        Scalar ei = coeff(h.counit, i);
        for (int a = 0; a < n; ++a) {
            cols[a] = side == Side::Right ? h.mul_basis(a, i) : h.mul_basis(i, a);
            axpy(cols[a], -ei, h.basis(a));
        }
        blocks.push_back(Matrix::from_columns(n, cols));
    }
    return null_space(vstack(blocks));
}

SparseVec distinguished_grouplike(const FinHopf& h) {
    auto ints = integral_space(h, Side::Right);
    if (ints.size() != 1) throw std::runtime_error("right integral space of " + h.name + " is not one-dimensional");
    const SparseVec& lam = ints[0];
    int p = lam.front().first;
    Scalar lp = lam.front().second;
    SparseVec alpha;
    for (int a = 0; a < h.dim; ++a) {
        SparseVec al = h.mul(h.basis(a), lam);
        Scalar v = coeff(al, p) / lp;
        if (al != scaled(lam, v)) throw std::logic_error("a * Lambda is not proportional to Lambda");
        if (!v.is_zero()) alpha.emplace_back(a, v);
    }
    std::string w;
    if (!is_algebra_map(h, alpha, &w)) throw std::logic_error("distinguished grouplike is not an algebra map at " + w);
    return alpha;
}

bool is_unimodular(const FinHopf& h) {
    Echelon l(h.dim), r(h.dim);
    for (const auto& v : integral_space(h, Side::Left)) l.add(v);
    for (const auto& v : integral_space(h, Side::Right)) r.add(v);
    return l.same_span(r);
}

namespace {

// Kernel of lambda -> [lambda(h_1) h_2 - lambda(h) 1] (right) or
// [h_1 lambda(h_2) - lambda(h) 1] (left) over all basis h.
SparseVec dual_integral(const FinHopf& h, Side side) {
    const int n = h.dim;
    Echelon ech(n);
    for (int b = 0; b < n && !ech.full(); ++b) {
        std::vector<std::vector<std::pair<int, Scalar>>> rows(n);
        for (const auto& [jk, c] : h.delta_basis(b)) {
            int j = jk / n, k = jk % n;
            if (side == Side::Right)
                rows[k].emplace_back(j, c);
            else
                rows[j].emplace_back(k, c);
        }
        for (const auto& [k, u] : h.unit) rows[k].emplace_back(b, -u);
        for (auto& r : rows) {
            SparseVec row = collect(std::move(r));
            if (!row.empty()) ech.add(row);
        }
    }
    Matrix sys(ech.rank(), n);
    auto basis = ech.basis();
    for (int i = 0; i < ech.rank(); ++i) sys.set_row(i, basis[i]);
    auto ns = null_space(sys);
    if (ns.size() != 1) throw std::runtime_error("integral space of the dual of " + h.name + " is not one-dimensional");
    return ns[0];
}

}  // namespace

SparseVec dual_right_integral(const FinHopf& h) { return dual_integral(h, Side::Right); }
SparseVec dual_left_integral(const FinHopf& h) { return dual_integral(h, Side::Left); }

bool is_dual_unimodular(const FinHopf& h) {
    SparseVec lam = dual_right_integral(h);
    const int n = h.dim;
    for (int b = 0; b < n; ++b) {
        std::vector<std::pair<int, Scalar>> raw;
        for (const auto& [jk, c] : h.delta_basis(b)) {
            Scalar v = coeff(lam, jk % n);
            if (!v.is_zero()) raw.emplace_back(jk / n, c * v);
        }
        if (collect(std::move(raw)) != scaled(h.unit, coeff(lam, b))) return false;
    }
    return true;
}

SparseVec convolve(const FinHopf& h, const SparseVec& f, const SparseVec& g) {
    const int n = h.dim;
    SparseVec out;
    for (int a = 0; a < n; ++a) {
        Scalar s(0);
        for (const auto& [jk, c] : h.delta_basis(a)) {
            Scalar fj = coeff(f, jk / n);
            if (fj.is_zero()) continue;
            s += c * fj * coeff(g, jk % n);
        }
        if (!s.is_zero()) out.emplace_back(a, s);
    }
    return out;
}

bool is_algebra_map(const FinHopf& h, const SparseVec& f, std::string* witness) {
    if (!evaluate(f, h.unit).is_one()) {
        if (witness) *witness = "unit";
        return false;
    }
    for (int a = 0; a < h.dim; ++a) {
        Scalar fa = coeff(f, a);
        for (int b = 0; b < h.dim; ++b)
            if (evaluate(f, h.mul_basis(a, b)) != fa * coeff(f, b)) {
                if (witness) *witness = "(" + h.labels[a] + "," + h.labels[b] + ")";
                return false;
            }
    }
    return true;
}

}  // namespace hopfrob
