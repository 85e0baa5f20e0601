#include "hopfrob/yd.hpp"

#include <stdexcept>

namespace hopfrob {

namespace {

// v -> v^(-1) w (x) v^(0) for a K-comodule V and a module W over K: V (x) W -> W (x) V.
Matrix half_braiding(const YDModule& v, const HModule& w) {
    const int dv = v.dim(), dw = w.dim;
    std::vector<SparseVec> cols(dv * dw);
    for (int a = 0; a < dv; ++a)
        for (int b = 0; b < dw; ++b) {
            SparseVec acc;
            for (const auto& [ka, c] : v.coaction.col(a)) {
                int k = ka / dv, a0 = ka % dv;
                for (const auto& [b0, cb] : w.act_basis(k, unit_vec(b))) acc.emplace_back(b0 * dv + a0, c * cb);
            }
            cols[a * dw + b] = collect(std::move(acc));
        }
    return Matrix::from_columns(dw * dv, cols);
}

std::string diff_witness(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape";
    auto d = a.first_difference(b);
    return d ? "(" + std::to_string(d->first) + "," + std::to_string(d->second) + ")" : "";
}

}  // namespace

Report verify_yd(const YDModule& m) {
    const FinHopf& h = m.over();
    const int n = h.dim, d = m.dim();
    if (m.coaction.rows() != n * d || m.coaction.cols() != d)
        throw std::invalid_argument("coaction must be (dim H * d) x d");
    Report rep = verify_module(m.mod);
    rep.title = "verify_yd " + m.name();
    auto cols = m.coaction.columns();
    std::string wa, wc;
    for (int a = 0; a < d; ++a) {
        std::vector<std::pair<int, Scalar>> l, r, e;
        for (const auto& [hb, c] : cols[a]) {
            int k = hb / d, b = hb % d;
            for (const auto& [pq, cp] : h.delta_basis(k)) l.emplace_back(pq * d + b, c * cp);
            for (const auto& [qb, cq] : cols[b]) r.emplace_back(k * n * d + qb, c * cq);
            Scalar ek = coeff(h.counit, k);
            if (!ek.is_zero()) e.emplace_back(b, c * ek);
        }
        if (wa.empty() && collect(l) != collect(r)) wa = std::to_string(a);
        if (wc.empty() && collect(e) != unit_vec(a)) wc = std::to_string(a);
    }
    rep.add("coassociativity", wa.empty(), wa, "yd.axioms");
    rep.add("counitality", wc.empty(), wc, "yd.axioms");

    auto bad = first_failure<int>(n, [&](int x) -> std::optional<int> {
        SparseVec d2 = h.delta2(h.basis(x));
        for (int a = 0; a < d; ++a) {
            SparseVec lhs = m.coaction.apply(m.mod.act_basis(x, unit_vec(a)));
            std::vector<std::pair<int, Scalar>> rhs;
            for (const auto& [pqs, c] : d2) {
                int p = pqs / (n * n), q = (pqs / n) % n, s = pqs % n;
                SparseVec sS = h.S(h.basis(s));
                for (const auto& [kb, ck] : cols[a]) {
                    int k = kb / d, b = kb % d;
                    SparseVec left = h.mul({h.basis(p), h.basis(k), sS});
                    SparseVec right = m.mod.act_basis(q, unit_vec(b));
                    for (const auto& [t, ct] : left)
                        for (const auto& [u, cu] : right) rhs.emplace_back(t * d + u, c * ck * ct * cu);
                }
            }
            if (lhs != collect(std::move(rhs))) return a;
        }
        return std::nullopt;
    });
    rep.add("yd_condition", !bad, bad ? "(" + h.labels[bad->first] + "," + std::to_string(bad->second) + ")" : "",
            "yd.axioms");
    return rep;
}

Matrix grouplike_coaction(const FinHopf& h, int g, int dim) {
    Matrix c(h.dim * dim, dim);
    for (int a = 0; a < dim; ++a) c.set(g * dim + a, a, Scalar(1));
    return c;
}

Matrix trivial_coaction(const FinHopf& h, int dim) {
    Matrix c(h.dim * dim, dim);
    for (int a = 0; a < dim; ++a)
        for (const auto& [u, cu] : h.unit) c.set(u * dim + a, a, cu);
    return c;
}

YDModule trivial_yd(const HopfPtr& h) { return {trivial_module(h), trivial_coaction(*h, 1)}; }

YDModule one_dim_yd(const HopfPtr& h, const SparseVec& character, int degree, std::string name) {
    return {character_module(h, character, std::move(name)), grouplike_coaction(*h, degree, 1)};
}

YDModule klein_yd(const HopfPtr& kk, int ex, int ey, const std::string& degree) {
    HModule m = klein_character(kk, ex, ey);
    m.name += "^" + degree;
    return {m, grouplike_coaction(*kk, kk->index_of(degree), 1)};
}

std::vector<YDModule> klein_yd_simples(const HopfPtr& kk) {
    std::vector<YDModule> out;
    for (const char* g : {"1", "x", "y", "xy"})
        for (int ex : {1, -1})
            for (int ey : {1, -1}) out.push_back(klein_yd(kk, ex, ey, g));
    return out;
}

YDModule yd_tensor(const YDModule& m, const YDModule& n) {
    const FinHopf& h = m.over();
    const int dm = m.dim(), dn = n.dim();
    YDModule t{tensor_modules(m.mod, n.mod), Matrix()};
    std::vector<SparseVec> cols(dm * dn);
    auto cm = m.coaction.columns(), cn = n.coaction.columns();
    for (int a = 0; a < dm; ++a)
        for (int b = 0; b < dn; ++b) {
            std::vector<std::pair<int, Scalar>> raw;
            for (const auto& [ka, c1] : cm[a])
                for (const auto& [kb, c2] : cn[b])
                    for (const auto& [s, cs] : h.mul_basis(ka / dm, kb / dn))
                        raw.emplace_back(s * dm * dn + (ka % dm) * dn + kb % dn, c1 * c2 * cs);
            cols[a * dn + b] = collect(std::move(raw));
        }
    t.coaction = Matrix::from_columns(h.dim * dm * dn, cols);
    return t;
}

Matrix yd_braiding(const YDModule& m, const YDModule& n) { return half_braiding(m, n.mod); }

bool is_comodule_map(const YDModule& m, const YDModule& n, const Matrix& f) {
    return n.coaction * f == kron(Matrix::identity(m.over().dim), f) * m.coaction;
}

bool is_yd_map(const YDModule& m, const YDModule& n, const Matrix& f) {
    return is_module_map(m.mod, n.mod, f) && is_comodule_map(m, n, f);
}

Report verify_hexagons(const YDModule& u, const YDModule& v, const YDModule& w) {
    Report rep;
    rep.title = "hexagons (" + u.name() + "," + v.name() + "," + w.name() + ")";
    Matrix iu = Matrix::identity(u.dim()), iv = Matrix::identity(v.dim()), iw = Matrix::identity(w.dim());
    YDModule uv = yd_tensor(u, v), vw = yd_tensor(v, w);
    Matrix l1 = yd_braiding(u, vw);
    Matrix r1 = kron(iv, yd_braiding(u, w)) * kron(yd_braiding(u, v), iw);
    rep.add("hexagon_1", l1 == r1, diff_witness(l1, r1), "yd.braiding");
    Matrix l2 = yd_braiding(uv, w);
    Matrix r2 = kron(yd_braiding(u, w), iv) * kron(iu, yd_braiding(v, w));
    rep.add("hexagon_2", l2 == r2, diff_witness(l2, r2), "yd.braiding");
    Matrix psi = yd_braiding(u, v);
    bool inv = rank(psi) == psi.rows();
    rep.add("braiding_invertible", inv, "Psi", "yd.braiding");
    rep.add("braiding_yd_map", is_yd_map(uv, yd_tensor(v, u), psi), "Psi", "yd.braiding");
    return rep;
}

Matrix induced_coaction(const FrobeniusContext& ctx, const YDModule& v) {
    const FinHopf& H = ctx.H();
    const int n = H.dim, d = v.dim(), di = ctx.r * d;
    auto ik = ctx.incl.embed.columns();
    auto vc = v.coaction.columns();
    std::vector<SparseVec> cols(di);
    parallel_for(ctx.r, [&](int i) {
        SparseVec d2 = H.delta2(H.basis(ctx.right.elems[i]));
        for (int a = 0; a < d; ++a) {
            std::vector<std::pair<int, Scalar>> raw;
            for (const auto& [pqs, c] : d2) {
                int p = pqs / (n * n), q = (pqs / n) % n, s = pqs % n;
                SparseVec sS = H.S(H.basis(s));
                for (const auto& [kb, ck] : vc[a]) {
                    SparseVec left = H.mul({H.basis(p), ik[kb / d], sS});
                    SparseVec right = induced_element(ctx, v.mod, H.basis(q), unit_vec(kb % d));
                    for (const auto& [t, ct] : left)
                        for (const auto& [u, cu] : right) raw.emplace_back(t * di + u, c * ck * ct * cu);
                }
            }
            cols[i * d + a] = collect(std::move(raw));
        }
    });
    return Matrix::from_columns(n * di, cols);
}

Matrix induced_coaction_via_projections(const FrobeniusContext& ctx, const YDModule& v) {
    const FinHopf& H = ctx.H();
    HModule reg = regular_module(ctx.incl.H);
    HModule rreg = restrict_module(ctx.incl, reg);
    auto pm = projection_morphisms(ctx, reg, v.mod);
    auto linv = inverse(pm.lproj_gf);
    if (!linv) throw std::logic_error("left projection morphism is not invertible");
    Matrix sigma = induce_map(ctx, half_braiding(v, rreg));
    Matrix full = *linv * sigma * pm.rproj_gf;  // Ind V (x) H -> H (x) Ind V
    const int di = ctx.r * v.dim();
    std::vector<SparseVec> cols(di);
    // x (x) 1_H, and 1_H need not be a basis vector.
    for (int x = 0; x < di; ++x) {
        SparseVec acc;
        for (const auto& [u, cu] : H.unit) axpy(acc, cu, full.col(x * H.dim + u));
        cols[x] = std::move(acc);
    }
    return Matrix::from_columns(H.dim * di, cols);
}

YDModule z_induce(const FrobeniusContext& ctx, const YDModule& v) {
    if (!ctx.central) throw std::invalid_argument("z_induce requires a central Frobenius extension: " + ctx.incl.name);
    return {induce(ctx, v.mod), induced_coaction(ctx, v)};
}

Report verify_braided_frobenius(const FrobeniusContext& ctx, const YDModule& x, const YDModule& y) {
    Report rep;
    rep.title = "braided frobenius (" + x.name() + "," + y.name() + ")";
    YDModule fx = z_induce(ctx, x), fy = z_induce(ctx, y);
    YDModule xy = yd_tensor(x, y), yx = yd_tensor(y, x);
    Matrix l = lax(ctx, x.mod, y.mod), lyx = lax(ctx, y.mod, x.mod);
    Matrix o = oplax(ctx, x.mod, y.mod), oyx = oplax(ctx, y.mod, x.mod);
    Matrix fpsi = induce_map(ctx, yd_braiding(x, y));
    Matrix psi = yd_braiding(fx, fy);
    Matrix a1 = lyx * psi, a2 = fpsi * l;
    rep.add("lax_braided", a1 == a2, diff_witness(a1, a2), "yd.braided_frobenius");
    Matrix b1 = oyx * fpsi, b2 = psi * o;
    rep.add("oplax_braided", b1 == b2, diff_witness(b1, b2), "yd.braided_frobenius");
    YDModule fxfy = yd_tensor(fx, fy), fxy = z_induce(ctx, xy);
    rep.add("lax_yd_map", is_comodule_map(fxfy, fxy, l), "lax", "yd.braided_frobenius");
    rep.add("oplax_yd_map", is_comodule_map(fxy, fxfy, o), "oplax", "yd.braided_frobenius");
    return rep;
}

}  // namespace hopfrob
