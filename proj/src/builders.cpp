#include "hopfrob/builders.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace hopfrob {

namespace {

FinHopf blank(std::string name, int n, int conductor, std::vector<std::string> labels) {
    FinHopf h;
    h.name = std::move(name);
    h.dim = n;
    h.conductor = conductor;
    h.labels = std::move(labels);
    h.mult = SparseTensor({n, n, n}, 2);
    h.comult = SparseTensor({n, n, n}, 1);
    h.antipode = Matrix(n, n);
    h.unit = unit_vec(0);
    return h;
}

}  // namespace

void complete_from_generators(FinHopf& h, const std::vector<GeneratorData>& gens,
                              const std::vector<std::pair<int, int>>& words) {
    const int n = h.dim;
    std::vector<std::optional<SparseVec>> delta(n), anti(n);
    std::vector<std::optional<Scalar>> eps(n);
    delta[0] = h.tensor2(h.unit, h.unit);
    anti[0] = h.unit;
    eps[0] = Scalar(1);
    std::function<void(int)> build = [&](int b) {
        if (delta[b]) return;
        auto [g, r] = words[b];
        build(r);
        const GeneratorData& gd = gens[g];
        delta[b] = h.mul2(gd.delta, *delta[r]);
        anti[b] = h.mul(*anti[r], gd.antipode);
        eps[b] = gd.counit * *eps[r];
    };
    std::vector<SparseVec> scols(n);
    h.counit.clear();
    for (int b = 0; b < n; ++b) {
        build(b);
        h.comult.set_fiber(b, *delta[b]);
        scols[b] = *anti[b];
        if (!eps[b]->is_zero()) h.counit.emplace_back(b, *eps[b]);
    }
    h.antipode = Matrix::from_columns(n, scols);
    h.generators.clear();
    for (const auto& gd : gens) h.generators.push_back(gd.basis_index);
}

SparseTensor mult_from_left_action(int dim, const std::vector<std::pair<int, int>>& words,
                                   const std::function<SparseVec(int, int)>& left) {
    SparseTensor t({dim, dim, dim}, 2);
    std::vector<std::vector<SparseVec>> rows(dim);
    rows[0].resize(dim);
    for (int b = 0; b < dim; ++b) rows[0][b] = unit_vec(b);
    std::function<void(int)> build = [&](int a) {
        if (!rows[a].empty()) return;
        auto [g, r] = words[a];
        build(r);
        std::vector<SparseVec> row(dim);
        for (int b = 0; b < dim; ++b) {
            std::vector<std::pair<int, Scalar>> raw;
            for (const auto& [k, c] : rows[r][b])
                for (const auto& [p, cp] : left(g, k)) raw.emplace_back(p, c * cp);
            row[b] = collect(std::move(raw));
        }
        rows[a] = std::move(row);
    };
    for (int a = 0; a < dim; ++a) {
        build(a);
        for (int b = 0; b < dim; ++b) t.set_fiber(a * dim + b, rows[a][b]);
    }
    return t;
}

HopfPtr group_algebra(const std::vector<std::vector<int>>& table, std::vector<std::string> labels, std::string name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("empty group table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    }
    int e = -1;
    for (int g = 0; g < n && e < 0; ++g) {
        bool ok = true;
        for (int x = 0; x < n; ++x) ok = ok && table[g][x] == x && table[x][g] == x;
        if (ok) e = g;
    }
    if (e != 0) throw std::invalid_argument("group table must list the identity first");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) throw std::invalid_argument("group table is not associative");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0 && table[b][a] == 0) inv[a] = b;
    for (int a = 0; a < n; ++a)
        if (inv[a] < 0) throw std::invalid_argument("group table element without inverse");
    if (labels.empty())
        for (int a = 0; a < n; ++a) labels.push_back(a == 0 ? "1" : "g" + std::to_string(a));
    FinHopf h = blank(std::move(name), n, 1, std::move(labels));
    std::vector<SparseVec> scols(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) h.mult.set_fiber(a * n + b, unit_vec(table[a][b]));
        h.comult.set_fiber(a, unit_vec(a * n + a));
        h.counit.emplace_back(a, Scalar(1));
        scols[a] = unit_vec(inv[a]);
    }
    h.antipode = Matrix::from_columns(n, scols);
    h.conventions = {"group-algebra"};
    return std::make_shared<const FinHopf>(std::move(h));
}

HopfPtr cyclic_group_algebra(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return group_algebra(t, labels, "kC" + std::to_string(n));
}

HopfPtr klein_four() {
    // codes: 1 = 0, x = 1, y = 2, xy = 3; product is xor.
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return group_algebra(t, {"1", "x", "y", "xy"}, "kK");
}

HopfPtr kac_paljutkin() {
    const int n = 8;
    FinHopf h = blank("H8", n, 4, {"1", "x", "y", "z", "xy", "xz", "yz", "xyz"});
    // Klein code c in {1, x, y, xy} -> basis index of g and of g z.
    const int plain[4] = {0, 1, 2, 4};
    const int withz[4] = {3, 5, 6, 7};
    auto sigma = [](int c) { return ((c & 1) << 1) | ((c & 2) >> 1); };
    struct Elt {
        int code;
        bool z;
    };
    std::vector<Elt> elt(n);
    for (int c = 0; c < 4; ++c) {
        elt[plain[c]] = {c, false};
        elt[withz[c]] = {c, true};
    }
    const Rational half(1, 2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto [g, gz] = elt[a];
            auto [h2, hz] = elt[b];
            SparseVec r;
            if (!gz) {
                r = unit_vec((hz ? withz : plain)[g ^ h2]);
            } else if (!hz) {
                r = unit_vec(withz[g ^ sigma(h2)]);
            } else {
                // z^2 = (1 + x + y - xy) / 2
                int base = g ^ sigma(h2);
                std::vector<std::pair<int, Scalar>> raw;
                for (int c = 0; c < 4; ++c) raw.emplace_back(plain[base ^ c], Scalar(c == 3 ? -half : half));
                r = collect(std::move(raw));
            }
            h.mult.set_fiber(a * n + b, std::move(r));
        }
    const int x = 1, y = 2, z = 3, xz = 5, yz = 6;
    auto t = [&](int a, int b) { return a * n + b; };
    SparseVec dz = collect({{t(z, z), Scalar(half)},
                            {t(z, xz), Scalar(half)},
                            {t(yz, z), Scalar(half)},
                            {t(yz, xz), Scalar(-half)}});
    std::vector<GeneratorData> gens = {
        {x, unit_vec(t(x, x)), unit_vec(x), Scalar(1)},
        {y, unit_vec(t(y, y)), unit_vec(y), Scalar(1)},
        {z, dz, unit_vec(z), Scalar(1)},
    };
    std::vector<std::pair<int, int>> words = {{0, 0}, {0, 0}, {1, 0}, {2, 0}, {0, 2}, {0, 3}, {1, 3}, {0, 6}};
    complete_from_generators(h, gens, words);
    h.conventions = {"kac-paljutkin", "zx=yz", "eps(z)=1"};
    return std::make_shared<const FinHopf>(std::move(h));
}

HopfInclusion kac_paljutkin_inclusion() {
    HopfPtr h = kac_paljutkin();
    HopfPtr k = klein_four();
    Matrix emb(8, 4);
    const int img[4] = {0, 1, 2, 4};
    for (int a = 0; a < 4; ++a) emb.set(img[a], a, Scalar(1));
    return {"kK<H8", k, h, emb};
}

HopfPtr taft(int l, int q_power) {
    if (l < 2) throw std::invalid_argument("Taft algebra needs l >= 2");
    if (std::gcd(((q_power % l) + l) % l, l) != 1) throw std::invalid_argument("Taft parameter q is not a primitive root");
    const int n = l * l;
    std::vector<std::string> labels;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            std::string s;
            if (i) s += i == 1 ? "g" : "g^" + std::to_string(i);
            if (j) s += j == 1 ? "x" : "x^" + std::to_string(j);
            labels.push_back(s.empty() ? "1" : s);
        }
    FinHopf h = blank("T" + std::to_string(l), n, l, labels);
    auto idx = [l](int i, int j) { return (i % l) * l + j; };
    // g x = q x g, hence g^i x^j g^k x^m = q^{-jk} g^{i+k} x^{j+m}.
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k)
                for (int m = 0; m < l; ++m) {
                    SparseVec r;
                    if (j + m < l) r = unit_vec(idx(i + k, j + m), root_of_unity(l, -static_cast<std::int64_t>(q_power) * j * k));
                    h.mult.set_fiber(idx(i, j) * n + idx(k, m), std::move(r));
                }
    const int g = idx(1, 0), x = idx(0, 1), ginv = idx(l - 1, 0);
    SparseVec dx = collect({{x * n + 0, Scalar(1)}, {g * n + x, Scalar(1)}});
    SparseVec sx = scaled(h.mul(unit_vec(ginv), unit_vec(x)), Scalar(-1));
    std::vector<GeneratorData> gens = {{g, unit_vec(g * n + g), unit_vec(ginv), Scalar(1)}, {x, dx, sx, Scalar(0)}};
    std::vector<std::pair<int, int>> words(n);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == 0 && j == 0) continue;
            words[idx(i, j)] = i > 0 ? std::make_pair(0, idx(i - 1, j)) : std::make_pair(1, idx(0, j - 1));
        }
    complete_from_generators(h, gens, words);
    h.conventions = {"taft", "gx=qxg", "Delta(x)=x@1+g@x", "q=zeta^" + std::to_string(q_power)};
    return std::make_shared<const FinHopf>(std::move(h));
}

HopfInclusion taft_inclusion(int l, int q_power) {
    HopfPtr t = taft(l, q_power);
    HopfPtr k = cyclic_group_algebra(l);
    Matrix emb(l * l, l);
    for (int i = 0; i < l; ++i) emb.set(i * l, i, Scalar(1));
    return {"kC" + std::to_string(l) + "<T" + std::to_string(l), k, t, emb};
}

int sl2_index(int l, int j, int m, int i) { return (j * l + ((m % l) + l) % l) * l + i; }

HopfPtr small_quantum_sl2(int l) {
    if (l < 3 || l % 2 == 0) throw std::invalid_argument("small quantum sl2 needs odd l >= 3");
    const int n = l * l * l;
    std::vector<std::string> labels(n);
    for (int j = 0; j < l; ++j)
        for (int m = 0; m < l; ++m)
            for (int i = 0; i < l; ++i) {
                std::string s;
                if (j) s += j == 1 ? "f" : "f^" + std::to_string(j);
                if (m) s += m == 1 ? "k" : "k^" + std::to_string(m);
                if (i) s += i == 1 ? "e" : "e^" + std::to_string(i);
                labels[sl2_index(l, j, m, i)] = s.empty() ? "1" : s;
            }
    FinHopf h = blank("u(sl2," + std::to_string(l) + ")", n, l, labels);
    auto q = [l](std::int64_t k) { return root_of_unity(l, k); };
    Scalar denom_inv = (q(1) - q(-1)).inverse();
    auto qint = [&](int j) { return (q(j) - q(-j)) * denom_inv; };
    auto at = [&](int j, int m, int i) { return sl2_index(l, j, m, i); };
    std::vector<std::array<int, 3>> coords(n);
    for (int j = 0; j < l; ++j)
        for (int m = 0; m < l; ++m)
            for (int i = 0; i < l; ++i) coords[at(j, m, i)] = {j, m, i};
    // Left multiplication by F (0), K (1), E (2) on f^j k^m e^i.
    auto left = [&](int g, int b) -> SparseVec {
        auto [j, m, i] = coords[b];
        if (g == 0) return j + 1 < l ? unit_vec(at(j + 1, m, i)) : SparseVec{};
        if (g == 1) return unit_vec(at(j, m + 1, i), q(-2 * j));
        std::vector<std::pair<int, Scalar>> raw;
        if (i + 1 < l) raw.emplace_back(at(j, m, i + 1), q(-2 * m));
        if (j >= 1) {
            Scalar c = qint(j) * denom_inv;
            raw.emplace_back(at(j - 1, m + 1, i), c * q(-(j - 1)));
            raw.emplace_back(at(j - 1, m - 1, i), -c * q(j - 1));
        }
        return collect(std::move(raw));
    };
    std::vector<std::pair<int, int>> words(n);
    for (int b = 1; b < n; ++b) {
        auto [j, m, i] = coords[b];
        if (j > 0)
            words[b] = {0, at(j - 1, m, i)};
        else if (m > 0)
            words[b] = {1, at(0, m - 1, i)};
        else
            words[b] = {2, at(0, 0, i - 1)};
    }
    h.mult = mult_from_left_action(n, words, left);
    const int F = at(1, 0, 0), K = at(0, 1, 0), E = at(0, 0, 1), Kinv = at(0, l - 1, 0);
    auto t = [n](int a, int b) { return a * n + b; };
    SparseVec dE = collect({{t(0, E), Scalar(1)}, {t(E, K), Scalar(1)}});
    SparseVec dF = collect({{t(Kinv, F), Scalar(1)}, {t(F, 0), Scalar(1)}});
    SparseVec sE = scaled(h.mul(unit_vec(E), unit_vec(Kinv)), Scalar(-1));
    SparseVec sF = scaled(h.mul(unit_vec(K), unit_vec(F)), Scalar(-1));
    std::vector<GeneratorData> gens = {
        {F, dF, sF, Scalar(0)},
        {K, unit_vec(t(K, K)), unit_vec(Kinv), Scalar(1)},
        {E, dE, sE, Scalar(0)},
    };
    complete_from_generators(h, gens, words);
    h.conventions = {"kassel", "Delta(E)=1@E+E@K", "Delta(F)=K^-1@F+F@1", "eps=zeta_" + std::to_string(l)};
    return std::make_shared<const FinHopf>(std::move(h));
}

HopfInclusion sub_hopf(const HopfPtr& h, const std::vector<int>& subset, const std::string& name) {
    const int n = h->dim;
    const int d = static_cast<int>(subset.size());
    std::vector<int> pos(n, -1);
    for (int a = 0; a < d; ++a) pos[subset[a]] = a;
    if (subset.empty() || pos[0] != 0) throw std::invalid_argument("subalgebra basis must start with the unit");
    auto restrict_vec = [&](const SparseVec& v, const char* what) {
        std::vector<std::pair<int, Scalar>> raw;
        for (const auto& [i, c] : v) {
            if (pos[i] < 0) throw std::invalid_argument(std::string("subset not closed under ") + what);
            raw.emplace_back(pos[i], c);
        }
        return collect(std::move(raw));
    };
    auto restrict_pair = [&](const SparseVec& v) {
        std::vector<std::pair<int, Scalar>> raw;
        for (const auto& [jk, c] : v) {
            int j = jk / n, k = jk % n;
            if (pos[j] < 0 || pos[k] < 0) throw std::invalid_argument("subset not closed under comultiplication");
            raw.emplace_back(pos[j] * d + pos[k], c);
        }
        return collect(std::move(raw));
    };
    std::vector<std::string> labels;
    for (int a : subset) labels.push_back(h->labels[a]);
    FinHopf k = blank(name, d, h->conductor, labels);
    std::vector<SparseVec> scols(d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b)
            k.mult.set_fiber(a * d + b, restrict_vec(h->mul_basis(subset[a], subset[b]), "multiplication"));
        k.comult.set_fiber(a, restrict_pair(h->delta_basis(subset[a])));
        scols[a] = restrict_vec(h->S(h->basis(subset[a])), "the antipode");
        Scalar e = coeff(h->counit, subset[a]);
        if (!e.is_zero()) k.counit.emplace_back(a, e);
    }
    k.antipode = Matrix::from_columns(d, scols);
    k.unit = restrict_vec(h->unit, "the unit");
    k.conventions = h->conventions;
    Matrix emb(n, d);
    for (int a = 0; a < d; ++a) emb.set(subset[a], a, Scalar(1));
    return {name + "<" + h->name, std::make_shared<const FinHopf>(std::move(k)), h, emb};
}

HopfInclusion sl2_subalgebra(const HopfPtr& u, int l, bool with_e, bool with_f) {
    std::vector<int> subset;
    for (int j = 0; j < (with_f ? l : 1); ++j)
        for (int m = 0; m < l; ++m)
            for (int i = 0; i < (with_e ? l : 1); ++i) subset.push_back(sl2_index(l, j, m, i));
    std::string name = std::string("u(<K>,") + (with_e ? "{1}" : "{}") + "," + (with_f ? "{1}" : "{}") + ")";
    return sub_hopf(u, subset, name);
}

HopfInclusion sl2_cartan(const HopfPtr& u, int l) { return sl2_subalgebra(u, l, false, false); }
HopfInclusion sl2_borel_plus(const HopfPtr& u, int l) { return sl2_subalgebra(u, l, true, false); }
HopfInclusion sl2_borel_minus(const HopfPtr& u, int l) { return sl2_subalgebra(u, l, false, true); }

HopfInclusion drinfeld_double(const HopfPtr& hp) {
    const FinHopf& h = *hp;
    const int n = h.dim;
    const int N = n * n;
    Matrix sinv = antipode_inverse(h);
    auto sinv_cols = sinv.columns();
    std::vector<std::string> labels;
    for (int p = 0; p < n; ++p)
        for (int a = 0; a < n; ++a) labels.push_back("(d[" + h.labels[p] + "]|" + h.labels[a] + ")");
    FinHopf d = blank("D(" + h.name + ")", N, h.conductor, labels);
    // bucket[p][hh]: terms (k, c) of Delta(e_hh) with first leg p, so (d^p * phi)(e_hh) = sum c phi(e_k).
    std::vector<std::vector<SparseVec>> bucket(n, std::vector<SparseVec>(n));
    for (int hh = 0; hh < n; ++hh) {
        std::vector<std::vector<std::pair<int, Scalar>>> raw(n);
        for (const auto& [jk, c] : h.delta_basis(hh)) raw[jk / n].emplace_back(jk % n, c);
        for (int p = 0; p < n; ++p) bucket[p][hh] = collect(std::move(raw[p]));
    }
    struct Term {
        int a1, a2, a3;
        Scalar c;
    };
    std::vector<std::vector<Term>> d2(n);
    for (int a = 0; a < n; ++a)
        for (const auto& [ijk, c] : h.delta2(h.basis(a))) d2[a].push_back({ijk / (n * n), (ijk / n) % n, ijk % n, c});
    // conj[q][a1][a3](hh) = coefficient of e_q in S^{-1}(e_a3) e_hh e_a1
    auto conj = [&](int q, int a1, int a3) {
        std::vector<Scalar> phi(n);
        for (int hh = 0; hh < n; ++hh) phi[hh] = coeff(h.mul(h.mul(sinv_cols[a3], h.basis(hh)), h.basis(a1)), q);
        return phi;
    };
    std::vector<std::vector<std::vector<Scalar>>> conj_cache(n, std::vector<std::vector<Scalar>>(n * n));
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < n; ++p)
            for (int b = 0; b < n; ++b)
                for (int q = 0; q < n; ++q) {
                    std::vector<std::pair<int, Scalar>> raw;
                    for (const auto& t : d2[a]) {
                        auto& cached = conj_cache[q][t.a1 * n + t.a3];
                        if (cached.empty()) cached = conj(q, t.a1, t.a3);
                        const SparseVec& a2b = h.mul_basis(t.a2, b);
                        for (int hh = 0; hh < n; ++hh) {
                            Scalar psi(0);
                            for (const auto& [k, c] : bucket[p][hh])
                                if (!cached[k].is_zero()) psi += c * cached[k];
                            if (psi.is_zero()) continue;
                            psi *= t.c;
                            for (const auto& [s, cs] : a2b) raw.emplace_back(hh * n + s, psi * cs);
                        }
                    }
                    d.mult.set_fiber((p * n + a) * N + (q * n + b), collect(std::move(raw)));
                }
    d.unit.clear();
    {
        std::vector<std::pair<int, Scalar>> raw;
        for (const auto& [p, ep] : h.counit)
            for (const auto& [u, cu] : h.unit) raw.emplace_back(p * n + u, ep * cu);
        d.unit = collect(std::move(raw));
    }
    for (int p = 0; p < n; ++p)
        for (int a = 0; a < n; ++a) {
            std::vector<std::pair<int, Scalar>> raw;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Scalar m = coeff(h.mul_basis(j, k), p);
                    if (m.is_zero()) continue;
                    for (const auto& [st, c] : h.delta_basis(a)) {
                        int s = st / n, t = st % n;
                        raw.emplace_back((k * n + s) * N + (j * n + t), m * c);
                    }
                }
            d.comult.set_fiber(p * n + a, collect(std::move(raw)));
            Scalar e = coeff(h.unit, p) * coeff(h.counit, a);
            if (!e.is_zero()) d.counit.emplace_back(p * n + a, e);
        }
    std::vector<SparseVec> scols(N);
    for (int p = 0; p < n; ++p)
        for (int a = 0; a < n; ++a) {
            std::vector<std::pair<int, Scalar>> left, right;
            for (const auto& [q, ep] : h.counit)
                for (const auto& [s, cs] : h.S(h.basis(a))) left.emplace_back(q * n + s, ep * cs);
            for (int hh = 0; hh < n; ++hh) {
                Scalar v = sinv.at(p, hh);
                if (v.is_zero()) continue;
                for (const auto& [u, cu] : h.unit) right.emplace_back(hh * n + u, v * cu);
            }
            scols[p * n + a] = d.mul(collect(std::move(left)), collect(std::move(right)));
        }
    d.antipode = Matrix::from_columns(N, scols);
    d.conventions = {"radford-double", "H*cop(x)H"};
    Matrix emb(N, n);
    for (const auto& [p, ep] : h.counit)
        for (int a = 0; a < n; ++a) emb.set(p * n + a, a, ep);
    return {h.name + "<D(" + h.name + ")", hp, std::make_shared<const FinHopf>(std::move(d)), emb};
}

HopfPtr ground_field() {
    FinHopf h = blank("k", 1, 1, {"1"});
    h.mult.set_fiber(0, unit_vec(0));
    h.comult.set_fiber(0, unit_vec(0));
    h.counit = unit_vec(0);
    h.antipode = Matrix::identity(1);
    return std::make_shared<const FinHopf>(std::move(h));
}

HopfInclusion identity_inclusion(const HopfPtr& h) { return {h->name + "<" + h->name, h, h, Matrix::identity(h->dim)}; }

HopfInclusion unit_inclusion(const HopfPtr& h) {
    return {"k<" + h->name, ground_field(), h, Matrix::column(h->unit, h->dim)};
}

}  // namespace hopfrob
