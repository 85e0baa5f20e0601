#include "hopfrob/induction.hpp"

#include <stdexcept>

namespace hopfrob {

namespace {

SparseVec kron_vec(const SparseVec& a, const SparseVec& b, int db) {
    SparseVec out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) out.emplace_back(i * db + j, ci * cj);
    return out;
}

// tr(e_p b_i) for every H-basis p and right-free basis element b_i.
std::vector<std::vector<SparseVec>> trace_table(const FrobeniusContext& ctx) {
    const FinHopf& H = ctx.H();
    std::vector<std::vector<SparseVec>> t(H.dim, std::vector<SparseVec>(ctx.r));
    for (int p = 0; p < H.dim; ++p)
        for (int i = 0; i < ctx.r; ++i) t[p][i] = ctx.tr.apply(H.mul_basis(p, ctx.right.elems[i]));
    return t;
}

SparseVec basis_elem(const FrobeniusContext& ctx, int i) { return ctx.H().basis(ctx.right.elems[i]); }

void require_over(const HModule& m, const FinHopf& h, const char* what) {
    if (m.over->dim != h.dim || m.over->name != h.name)
        throw std::invalid_argument(std::string(what) + " must be a module over " + h.name);
}

std::string check_eq(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape";
    auto d = a.first_difference(b);
    return d ? "(" + std::to_string(d->first) + "," + std::to_string(d->second) + ")" : "";
}

}  // namespace

SparseVec induced_element(const FrobeniusContext& ctx, const HModule& v, const SparseVec& x, const SparseVec& w) {
    return balanced_coords(ctx, x, w, v.dim, [&](const SparseVec& k, const SparseVec& u) { return v.act(k, u); });
}

HModule induce(const FrobeniusContext& ctx, const HModule& v) {
    const FinHopf& H = ctx.H();
    require_over(v, ctx.K(), "induced module source");
    const int d = ctx.r * v.dim;
    HModule m{ctx.incl.H, d, "Ind(" + v.name + ")", std::vector<Matrix>(H.dim)};
    parallel_for(H.dim, [&](int h) {
        std::vector<SparseVec> cols;
        cols.reserve(d);
        for (int i = 0; i < ctx.r; ++i) {
            SparseVec hb = H.mul(H.basis(h), basis_elem(ctx, i));
            for (int a = 0; a < v.dim; ++a) cols.push_back(induced_element(ctx, v, hb, unit_vec(a)));
        }
        m.action[h] = Matrix::from_columns(d, cols);
    });
    return m;
}

HModule coinduce(const FrobeniusContext& ctx, const HModule& v) {
    const FinHopf& H = ctx.H();
    const int dk = ctx.K().dim;
    require_over(v, ctx.K(), "coinduced module source");
    const int d = ctx.r * v.dim;
    HModule m{ctx.incl.H, d, "CoInd(" + v.name + ")", std::vector<Matrix>(H.dim)};
    parallel_for(H.dim, [&](int h) {
        Matrix acc(d, d);
        for (int j = 0; j < ctx.r; ++j) {
            SparseVec g = H.mul(H.basis(ctx.left.elems[j]), H.basis(h));
            // (h f)(h_j) = f(h_j h) = sum decomp_{(i,a)} k_a f(h_i)
            for (const auto& [ia, c] : ctx.left.decomp.apply(g)) {
                int i = ia / dk, a = ia % dk;
                for (int s = 0; s < v.dim; ++s)
                    for (const auto& [p, cp] : v.action[a].col(s)) acc.add_to(j * v.dim + p, i * v.dim + s, c * cp);
            }
        }
        m.action[h] = std::move(acc);
    });
    return m;
}

ThetaPair theta_iso(const FrobeniusContext& ctx, const HModule& v) {
    const FinHopf& H = ctx.H();
    const int d = ctx.r * v.dim;
    ThetaPair tp{Matrix(d, d), Matrix(d, d)};
    for (int i = 0; i < ctx.r; ++i)
        for (int j = 0; j < ctx.r; ++j) {
            SparseVec t = ctx.tr.apply(H.mul(H.basis(ctx.left.elems[j]), basis_elem(ctx, i)));
            if (t.empty()) continue;
            Matrix tv = v.act(t);
            for (int a = 0; a < v.dim; ++a)
                for (const auto& [p, c] : tv.col(a)) tp.theta.set(j * v.dim + p, i * v.dim + a, c);
        }
    std::vector<SparseVec> cols;
    for (int j = 0; j < ctx.r; ++j)
        for (int s = 0; s < v.dim; ++s) cols.push_back(induced_element(ctx, v, ctx.delta[j], unit_vec(s)));
    tp.theta_inv = Matrix::from_columns(d, cols);
    return tp;
}

Report verify_theta(const FrobeniusContext& ctx, const HModule& v) {
    Report rep;
    rep.title = "theta " + v.name;
    auto tp = theta_iso(ctx, v);
    HModule ind = induce(ctx, v), coind = coinduce(ctx, v);
    std::string w;
    rep.add("coinduced_module", verify_module(coind).all_pass(), "", "ind.theta");
    rep.add("theta_module_map", is_module_map(ind, coind, tp.theta, &w), w, "ind.theta");
    rep.add("theta_inverse_right", (tp.theta * tp.theta_inv).is_identity(), "theta theta^-1", "ind.theta");
    rep.add("theta_inverse_left", (tp.theta_inv * tp.theta).is_identity(), "theta^-1 theta", "ind.theta");
    return rep;
}

Matrix induce_map(const FrobeniusContext& ctx, const Matrix& f) { return kron(Matrix::identity(ctx.r), f); }

AdjunctionMaps adjunction_maps(const FrobeniusContext& ctx, const HModule& v, const HModule& w) {
    const FinHopf& H = ctx.H();
    require_over(v, ctx.K(), "adjunction source V");
    require_over(w, H, "adjunction source W");
    HModule rw = restrict_module(ctx.incl, w);
    AdjunctionMaps am;
    std::vector<SparseVec> cols;
    for (int s = 0; s < w.dim; ++s) {
        SparseVec acc;
        for (int i = 0; i < ctx.r; ++i)
            acc = acc + induced_element(ctx, rw, ctx.delta[i], w.act_basis(ctx.left.elems[i], unit_vec(s)));
        cols.push_back(std::move(acc));
    }
    am.unit_gf = Matrix::from_columns(ctx.r * w.dim, cols);

    cols.clear();
    for (int i = 0; i < ctx.r; ++i) {
        Matrix t = v.act(ctx.tr.apply(basis_elem(ctx, i)));
        for (int a = 0; a < v.dim; ++a) cols.push_back(t.col(a));
    }
    am.counit_gf = Matrix::from_columns(v.dim, cols);

    cols.clear();
    for (int a = 0; a < v.dim; ++a) cols.push_back(induced_element(ctx, v, H.unit, unit_vec(a)));
    am.unit_fg = Matrix::from_columns(ctx.r * v.dim, cols);

    cols.clear();
    for (int i = 0; i < ctx.r; ++i)
        for (int s = 0; s < w.dim; ++s) cols.push_back(w.act(basis_elem(ctx, i), unit_vec(s)));
    am.counit_fg = Matrix::from_columns(w.dim, cols);
    return am;
}

Report verify_adjunctions(const FrobeniusContext& ctx, const HModule& v, const HModule& w) {
    Report rep;
    rep.title = "adjunctions " + v.name + ", " + w.name;
    HModule rw = restrict_module(ctx.incl, w);
    HModule iv = induce(ctx, v);
    HModule irw = induce(ctx, rw);
    HModule riv = restrict_module(ctx.incl, iv);
    auto am = adjunction_maps(ctx, v, w);
    std::string wit;
    rep.add("unit_gf_module_map", is_module_map(w, irw, am.unit_gf, &wit), wit, "ind.adjunction");
    rep.add("counit_gf_module_map", is_module_map(riv, v, am.counit_gf, &wit), wit, "ind.adjunction");
    rep.add("unit_fg_module_map", is_module_map(v, riv, am.unit_fg, &wit), wit, "ind.adjunction");
    rep.add("counit_fg_module_map", is_module_map(irw, w, am.counit_fg, &wit), wit, "ind.adjunction");

    // F -| G: counit_{FV} F(unit_V) = id_{FV}, G(counit_W) unit_{GW} = id_{GW}.
    auto am_iv = adjunction_maps(ctx, v, iv);
    auto am_rw = adjunction_maps(ctx, rw, w);
    Matrix t1 = am_iv.counit_fg * induce_map(ctx, am.unit_fg);
    Matrix t2 = am.counit_fg * am_rw.unit_fg;
    rep.add("triangle_fg_left", t1.is_identity(), check_eq(t1, Matrix::identity(t1.rows())), "ind.adjunction");
    rep.add("triangle_fg_right", t2.is_identity(), check_eq(t2, Matrix::identity(t2.rows())), "ind.adjunction");
    // G -| F: counit_{GW} G(unit_W) = id_{GW}, F(counit_V) unit_{FV} = id_{FV}.
    Matrix t3 = am_rw.counit_gf * am.unit_gf;
    Matrix t4 = induce_map(ctx, am.counit_gf) * am_iv.unit_gf;
    rep.add("triangle_gf_left", t3.is_identity(), check_eq(t3, Matrix::identity(t3.rows())), "ind.adjunction");
    rep.add("triangle_gf_right", t4.is_identity(), check_eq(t4, Matrix::identity(t4.rows())), "ind.adjunction");
    return rep;
}

Matrix lax(const FrobeniusContext& ctx, const HModule& v, const HModule& u) {
    const FinHopf& H = ctx.H();
    const int n = H.dim, r = ctx.r;
    HModule vu = tensor_modules(v, u);
    auto t = trace_table(ctx);
    const int dv = v.dim, du = u.dim;
    const int iu = r * du;
    Matrix out(r * dv * du, r * dv * iu);
    std::vector<SparseVec> cols(r * dv * iu);
    parallel_for(r * dv, [&](int I) {
        int i = I / dv, a = I % dv;
        for (int J = 0; J < iu; ++J) {
            int j = J / du, b = J % du;
            SparseVec acc;
            for (int k = 0; k < r; ++k)
                for (const auto& [pq, c] : H.delta_basis(ctx.left.elems[k])) {
                    const SparseVec& t1 = t[pq / n][i];
                    const SparseVec& t2 = t[pq % n][j];
                    if (t1.empty() || t2.empty()) continue;
                    SparseVec w = kron_vec(v.act(t1, unit_vec(a)), u.act(t2, unit_vec(b)), du);
                    if (w.empty()) continue;
                    axpy(acc, c, induced_element(ctx, vu, ctx.delta[k], w));
                }
            cols[I * iu + J] = std::move(acc);
        }
    });
    return Matrix::from_columns(r * dv * du, cols);
}

Matrix lax0(const FrobeniusContext& ctx) {
    HModule one = trivial_module(ctx.incl.K);
    SparseVec acc;
    for (int k = 0; k < ctx.r; ++k) {
        Scalar e = coeff(ctx.H().counit, ctx.left.elems[k]);
        if (!e.is_zero()) axpy(acc, e, induced_element(ctx, one, ctx.delta[k], unit_vec(0)));
    }
    return Matrix::from_columns(ctx.r, {acc});
}

Matrix oplax(const FrobeniusContext& ctx, const HModule& v, const HModule& u) {
    const FinHopf& H = ctx.H();
    const int n = H.dim, r = ctx.r;
    const int dv = v.dim, du = u.dim, iu = r * du;
    std::vector<SparseVec> cols(r * dv * du);
    parallel_for(r, [&](int i) {
        const SparseVec& d = H.delta_basis(ctx.right.elems[i]);
        for (int a = 0; a < dv; ++a)
            for (int b = 0; b < du; ++b) {
                SparseVec acc;
                for (const auto& [pq, c] : d) {
                    SparseVec x = induced_element(ctx, v, H.basis(pq / n), unit_vec(a));
                    SparseVec y = induced_element(ctx, u, H.basis(pq % n), unit_vec(b));
                    axpy(acc, c, kron_vec(x, y, iu));
                }
                cols[(i * dv + a) * du + b] = collect(std::move(acc));
            }
    });
    return Matrix::from_columns(r * dv * iu, cols);
}

Matrix oplax0(const FrobeniusContext& ctx) {
    SparseVec row;
    for (int i = 0; i < ctx.r; ++i) {
        Scalar e = coeff(ctx.H().counit, ctx.right.elems[i]);
        if (!e.is_zero()) row.emplace_back(i, e);
    }
    return Matrix::row_vector(row, ctx.r);
}

Report verify_lax_oplax(const FrobeniusContext& ctx, const std::vector<HModule>& modules) {
    Report rep;
    rep.title = "lax/oplax structure";
    HModule one = trivial_module(ctx.incl.K);
    const int k = static_cast<int>(modules.size());
    std::string wa, wo, wu, wc;
    Matrix l0 = lax0(ctx), o0 = oplax0(ctx);
    for (int x = 0; x < k; ++x) {
        const HModule& X = modules[x];
        const int ix = ctx.r * X.dim;
        Matrix idx = Matrix::identity(ix);
        // lax_{1,X}(lax_0 (x) id) = id = lax_{X,1}(id (x) lax_0)
        Matrix ul = lax(ctx, one, X) * kron(l0, idx);
        Matrix ur = lax(ctx, X, one) * kron(idx, l0);
        if (wu.empty() && (!ul.is_identity() || !ur.is_identity())) wu = X.name;
        // (oplax_0 (x) id) oplax_{1,X} = id = (id (x) oplax_0) oplax_{X,1}
        Matrix cl = kron(o0, idx) * oplax(ctx, one, X);
        Matrix cr = kron(idx, o0) * oplax(ctx, X, one);
        if (wc.empty() && (!cl.is_identity() || !cr.is_identity())) wc = X.name;
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z) {
                const HModule& Y = modules[y];
                const HModule& Z = modules[z];
                HModule xy = tensor_modules(X, Y), yz = tensor_modules(Y, Z);
                Matrix iy = Matrix::identity(ctx.r * Y.dim), iz = Matrix::identity(ctx.r * Z.dim);
                Matrix lhs = lax(ctx, xy, Z) * kron(lax(ctx, X, Y), iz);
                Matrix rhs = lax(ctx, X, yz) * kron(idx, lax(ctx, Y, Z));
                if (wa.empty() && lhs != rhs) wa = "(" + X.name + "," + Y.name + "," + Z.name + ")";
                Matrix olhs = kron(oplax(ctx, X, Y), iz) * oplax(ctx, xy, Z);
                Matrix orhs = kron(idx, oplax(ctx, Y, Z)) * oplax(ctx, X, yz);
                if (wo.empty() && olhs != orhs) wo = "(" + X.name + "," + Y.name + "," + Z.name + ")";
            }
    }
    rep.add("lax_associativity", wa.empty(), wa, "ind.lax");
    rep.add("lax_unitality", wu.empty(), wu, "ind.lax");
    rep.add("oplax_coassociativity", wo.empty(), wo, "ind.oplax");
    rep.add("oplax_counitality", wc.empty(), wc, "ind.oplax");
    return rep;
}

Report verify_frobenius_monoidal(const FrobeniusContext& ctx, const HModule& x, const HModule& y, const HModule& z) {
    Report rep;
    rep.title = "frobenius monoidal (" + x.name + "," + y.name + "," + z.name + ")";
    HModule xy = tensor_modules(x, y), yz = tensor_modules(y, z);
    Matrix ix = Matrix::identity(ctx.r * x.dim), iz = Matrix::identity(ctx.r * z.dim);
    // F(X) F(Y (x) Z) -> F(X (x) Y) F(Z)
    Matrix l1 = kron(lax(ctx, x, y), iz) * kron(ix, oplax(ctx, y, z));
    Matrix r1 = oplax(ctx, xy, z) * lax(ctx, x, yz);
    rep.add("frobmon_1", l1 == r1, check_eq(l1, r1), "ind.frobenius_monoidal");
    // F(X (x) Y) F(Z) -> F(X) F(Y (x) Z)
    Matrix l2 = kron(ix, lax(ctx, y, z)) * kron(oplax(ctx, x, y), iz);
    Matrix r2 = oplax(ctx, x, yz) * lax(ctx, xy, z);
    rep.add("frobmon_2", l2 == r2, check_eq(l2, r2), "ind.frobenius_monoidal");
    return rep;
}

ProjectionMaps projection_morphisms(const FrobeniusContext& ctx, const HModule& w, const HModule& v) {
    const FinHopf& H = ctx.H();
    const int n = H.dim, r = ctx.r;
    require_over(w, H, "projection formula W");
    require_over(v, ctx.K(), "projection formula V");
    HModule rw = restrict_module(ctx.incl, w);
    HModule rwv = tensor_modules(rw, v), vrw = tensor_modules(v, rw);
    const int dw = w.dim, dv = v.dim, iv = r * dv;
    const int d = dw * iv;
    auto t = trace_table(ctx);
    Matrix sinv = antipode_inverse(H);
    ProjectionMaps pm;

    std::vector<SparseVec> lgf(d), rgf(d), lfg(d), rfg(d), linv(d), rinv(d);
    for (int s = 0; s < dw; ++s)
        for (int i = 0; i < r; ++i)
            for (int a = 0; a < dv; ++a) {
                SparseVec accl, accr;
                for (int k = 0; k < r; ++k)
                    for (const auto& [pq, c] : H.delta_basis(ctx.left.elems[k])) {
                        int p = pq / n, q = pq % n;
                        // w (x) (b_i (x) v) -> delta_k (x) ((h_k)_1 w (x) tr((h_k)_2 b_i) v)
                        if (!t[q][i].empty()) {
                            SparseVec x = kron_vec(w.act_basis(p, unit_vec(s)), v.act(t[q][i], unit_vec(a)), dv);
                            if (!x.empty()) axpy(accl, c, induced_element(ctx, rwv, ctx.delta[k], x));
                        }
                        // (b_i (x) v) (x) w -> delta_k (x) (tr((h_k)_1 b_i) v (x) (h_k)_2 w)
                        if (!t[p][i].empty()) {
                            SparseVec x = kron_vec(v.act(t[p][i], unit_vec(a)), w.act_basis(q, unit_vec(s)), dw);
                            if (!x.empty()) axpy(accr, c, induced_element(ctx, vrw, ctx.delta[k], x));
                        }
                    }
                lgf[s * iv + i * dv + a] = collect(std::move(accl));
                rgf[(i * dv + a) * dw + s] = collect(std::move(accr));

                SparseVec acc_li, acc_ri;
                for (const auto& [pq, c] : H.delta_basis(ctx.right.elems[i])) {
                    int p = pq / n, q = pq % n;
                    // w (x) (h (x) v) -> h_2 (x) (S^-1(h_1) w (x) v)
                    SparseVec x = kron_vec(w.act(sinv.col(p), unit_vec(s)), unit_vec(a), dv);
                    axpy(acc_li, c, induced_element(ctx, rwv, H.basis(q), x));
                    // (h (x) v) (x) w -> h_1 (x) (v (x) S(h_2) w)
                    SparseVec y = kron_vec(unit_vec(a), w.act(H.antipode.col(q), unit_vec(s)), dw);
                    axpy(acc_ri, c, induced_element(ctx, vrw, H.basis(p), y));
                }
                linv[s * iv + i * dv + a] = collect(std::move(acc_li));
                rinv[(i * dv + a) * dw + s] = collect(std::move(acc_ri));
            }
    for (int i = 0; i < r; ++i)
        for (int s = 0; s < dw; ++s)
            for (int a = 0; a < dv; ++a) {
                SparseVec accl, accr;
                for (const auto& [pq, c] : H.delta_basis(ctx.right.elems[i])) {
                    int p = pq / n, q = pq % n;
                    // b_i (x) (w (x) v) -> (b_i)_1 w (x) ((b_i)_2 (x) v)
                    axpy(accl, c, kron_vec(w.act_basis(p, unit_vec(s)), induced_element(ctx, v, H.basis(q), unit_vec(a)), iv));
                }
                lfg[(i * dw + s) * dv + a] = collect(std::move(accl));
                for (const auto& [pq, c] : H.delta_basis(ctx.right.elems[i])) {
                    int p = pq / n, q = pq % n;
                    // b_i (x) (v (x) w) -> ((b_i)_1 (x) v) (x) (b_i)_2 w
                    axpy(accr, c, kron_vec(induced_element(ctx, v, H.basis(p), unit_vec(a)), w.act_basis(q, unit_vec(s)), dw));
                }
                rfg[(i * dv + a) * dw + s] = collect(std::move(accr));
            }
    pm.lproj_gf = Matrix::from_columns(d, lgf);
    pm.rproj_gf = Matrix::from_columns(d, rgf);
    pm.lproj_fg = Matrix::from_columns(d, lfg);
    pm.rproj_fg = Matrix::from_columns(d, rfg);
    pm.lproj_fg_inv = Matrix::from_columns(d, linv);
    pm.rproj_fg_inv = Matrix::from_columns(d, rinv);
    return pm;
}

Report verify_projections(const FrobeniusContext& ctx, const HModule& w, const HModule& v) {
    Report rep;
    rep.title = "projection formulas " + w.name + ", " + v.name;
    auto pm = projection_morphisms(ctx, w, v);
    bool left = (pm.lproj_gf * pm.lproj_fg).is_identity() && (pm.lproj_fg * pm.lproj_gf).is_identity();
    bool right = (pm.rproj_gf * pm.rproj_fg).is_identity() && (pm.rproj_fg * pm.rproj_gf).is_identity();
    rep.add("left_pair_inverse", left, "lproj", "ind.projection");
    rep.add("right_pair_inverse", right, "rproj", "ind.projection");
    bool li = (pm.lproj_fg * pm.lproj_fg_inv).is_identity() && (pm.lproj_fg_inv * pm.lproj_fg).is_identity();
    bool ri = (pm.rproj_fg * pm.rproj_fg_inv).is_identity() && (pm.rproj_fg_inv * pm.rproj_fg).is_identity();
    rep.add("lproj_fg_closed_inverse", li, "lproj^-1", "ind.projection");
    rep.add("rproj_fg_closed_inverse", ri, "rproj^-1", "ind.projection");
    return rep;
}

std::optional<Scalar> separability_scalar(const FrobeniusContext& ctx, const HModule& v, const HModule& u) {
    return (lax(ctx, v, u) * oplax(ctx, v, u)).scalar_multiple_of_identity();
}

bool is_separable_functor(const FrobeniusContext& ctx, const std::vector<std::pair<HModule, HModule>>& sample,
                          std::optional<Scalar>* beta) {
    std::optional<Scalar> common;
    bool uniform = true;
    for (const auto& [v, u] : sample) {
        auto b = separability_scalar(ctx, v, u);
        if (!b || b->is_zero()) {
            if (beta) beta->reset();
            return false;
        }
        if (!common)
            common = *b;
        else if (*common != *b)
            uniform = false;
    }
    if (beta) *beta = uniform ? common : std::nullopt;
    return true;
}

}  // namespace hopfrob
