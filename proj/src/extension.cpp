#include "hopfrob/extension.hpp"

#include <stdexcept>

namespace hopfrob {

namespace {

std::vector<SparseVec> embedded_basis(const HopfInclusion& incl) { return incl.embed.columns(); }

// (iota (x) iota) on K (x) K.
SparseVec iota2(const HopfInclusion& incl, const std::vector<SparseVec>& ik, const SparseVec& v) {
    const int dk = incl.K->dim, dh = incl.H->dim;
    std::vector<std::pair<int, Scalar>> raw;
    for (const auto& [jk, c] : v)
        for (const auto& [p, cp] : ik[jk / dk])
            for (const auto& [q, cq] : ik[jk % dk]) raw.emplace_back(p * dh + q, c * cp * cq);
    return collect(std::move(raw));
}

// (f (x) g) applied to a vector of A (x) B given images of basis vectors.
SparseVec apply2(const std::vector<SparseVec>& f, const std::vector<SparseVec>& g, int db, int dout2,
                 const SparseVec& v) {
    std::vector<std::pair<int, Scalar>> raw;
    for (const auto& [jk, c] : v)
        for (const auto& [p, cp] : f[jk / db])
            for (const auto& [q, cq] : g[jk % db]) raw.emplace_back(p * dout2 + q, c * cp * cq);
    return collect(std::move(raw));
}

SparseVec lift_lambda(const BarQuotient& bq, const SparseVec& lambda) {
    SparseVec out;
    auto cols = bq.proj.columns();
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
        Scalar v = evaluate(lambda, cols[i]);
        if (!v.is_zero()) out.emplace_back(i, v);
    }
    return out;
}

std::string kbasis_witness(const FinHopf& k, const FinHopf& h, int a, int b) {
    return "(" + k.labels[a] + "," + h.labels[b] + ")";
}

}  // namespace

Report verify_inclusion(const HopfInclusion& incl) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    Report rep;
    rep.title = "inclusion " + incl.name;
    if (incl.embed.rows() != H.dim || incl.embed.cols() != K.dim)
        throw std::invalid_argument("embedding shape must be dim H x dim K");
    auto ik = embedded_basis(incl);
    int rk = rank(incl.embed);
    rep.add("injective", rk == K.dim, "rank=" + std::to_string(rk), "ext.inclusion");

    std::string w;
    for (int a = 0; a < K.dim && w.empty(); ++a)
        for (int b = 0; b < K.dim; ++b)
            if (incl.iota(K.mul_basis(a, b)) != H.mul(ik[a], ik[b])) {
                w = "(" + K.labels[a] + "," + K.labels[b] + ")";
                break;
            }
    rep.add("multiplicative", w.empty(), w, "ext.inclusion");
    rep.add("unital", incl.iota(K.unit) == H.unit, "unit", "ext.inclusion");

    w.clear();
    for (int a = 0; a < K.dim && w.empty(); ++a)
        if (iota2(incl, ik, K.delta_basis(a)) != H.delta(ik[a])) w = K.labels[a];
    rep.add("comultiplicative", w.empty(), w, "ext.inclusion");

    w.clear();
    for (int a = 0; a < K.dim && w.empty(); ++a)
        if (H.eps(ik[a]) != coeff(K.counit, a)) w = K.labels[a];
    rep.add("counital", w.empty(), w, "ext.inclusion");

    w.clear();
    for (int a = 0; a < K.dim && w.empty(); ++a)
        if (H.S(ik[a]) != incl.iota(K.S(K.basis(a)))) w = K.labels[a];
    rep.add("antipode", w.empty(), w, "ext.inclusion");
    return rep;
}

BarQuotient bar_quotient(const HopfInclusion& incl) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    const int dh = H.dim;
    auto ik = embedded_basis(incl);
    Echelon ker(dh);
    for (int a = 0; a < K.dim; ++a) {
        SparseVec kp = ik[a];
        axpy(kp, -coeff(K.counit, a), H.unit);
        if (kp.empty()) continue;
        for (int i = 0; i < dh; ++i) ker.add(H.mul(H.basis(i), kp));
    }
    BarQuotient bq;
    bq.kernel_basis = ker.basis();
    Echelon span = ker;
    for (int c = 0; c < dh && !span.full(); ++c)
        if (span.add(H.basis(c))) bq.reps.push_back(c);
    const int m = static_cast<int>(bq.reps.size());
    const int kd = static_cast<int>(bq.kernel_basis.size());
    bq.dimbar = m;
    std::vector<SparseVec> cols = bq.kernel_basis;
    for (int c : bq.reps) cols.push_back(H.basis(c));
    auto inv = inverse(Matrix::from_columns(dh, cols));
    if (!inv) throw std::logic_error("coset representatives do not complement H K^+");
    bq.proj = Matrix(m, dh);
    for (int b = 0; b < m; ++b) bq.proj.set_row(b, inv->row(kd + b));

    auto pcols = bq.proj.columns();
    bq.comult_bar = SparseTensor({m, m, m}, 1);
    for (int b = 0; b < m; ++b) {
        bq.comult_bar.set_fiber(b, apply2(pcols, pcols, dh, m, H.delta_basis(bq.reps[b])));
        Scalar e = coeff(H.counit, bq.reps[b]);
        if (!e.is_zero()) bq.counit_bar.emplace_back(b, e);
    }
    bq.coaug = bq.proj.apply(H.unit);
    return bq;
}

Report verify_bar_quotient(const HopfInclusion& incl, const BarQuotient& bq) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    const int m = bq.dimbar;
    Report rep;
    rep.title = "bar quotient " + incl.name;
    rep.add("index", m * K.dim == H.dim, "dim=" + std::to_string(m), "ext.bar");
    std::string w;
    for (std::size_t i = 0; i < bq.kernel_basis.size() && w.empty(); ++i)
        if (!bq.proj.apply(bq.kernel_basis[i]).empty()) w = std::to_string(i);
    rep.add("kernel", w.empty(), w, "ext.bar");

    auto ik = embedded_basis(incl);
    w.clear();
    for (int h = 0; h < H.dim && w.empty(); ++h) {
        SparseVec ph = bq.bar(H.basis(h));
        for (int a = 0; a < K.dim; ++a)
            if (bq.bar(H.mul(H.basis(h), ik[a])) != scaled(ph, coeff(K.counit, a))) {
                w = kbasis_witness(K, H, a, h);
                break;
            }
    }
    rep.add("right_K_trivial", w.empty(), w, "ext.bar");

    auto pcols = bq.proj.columns();
    w.clear();
    for (std::size_t i = 0; i < bq.kernel_basis.size() && w.empty(); ++i) {
        const SparseVec& v = bq.kernel_basis[i];
        if (!apply2(pcols, pcols, H.dim, m, H.delta(v)).empty() || !H.eps(v).is_zero()) w = std::to_string(i);
    }
    rep.add("coideal", w.empty(), w, "ext.bar");

    w.clear();
    for (int b = 0; b < m && w.empty(); ++b) {
        std::vector<std::pair<int, Scalar>> l, r;
        for (const auto& [jk, c] : bq.comult_bar.fiber(b)) {
            int j = jk / m, k = jk % m;
            for (const auto& [pq, d] : bq.comult_bar.fiber(j)) l.emplace_back(pq * m + k, c * d);
            for (const auto& [pq, d] : bq.comult_bar.fiber(k)) r.emplace_back(j * m * m + pq, c * d);
        }
        if (collect(l) != collect(r)) w = std::to_string(b);
    }
    rep.add("coassociativity", w.empty(), w, "ext.bar");

    w.clear();
    for (int b = 0; b < m && w.empty(); ++b) {
        std::vector<std::pair<int, Scalar>> l, r;
        for (const auto& [jk, c] : bq.comult_bar.fiber(b)) {
            Scalar ej = coeff(bq.counit_bar, jk / m), ek = coeff(bq.counit_bar, jk % m);
            if (!ej.is_zero()) l.emplace_back(jk % m, c * ej);
            if (!ek.is_zero()) r.emplace_back(jk / m, c * ek);
        }
        if (collect(l) != unit_vec(b) || collect(r) != unit_vec(b)) w = std::to_string(b);
    }
    rep.add("counitality", w.empty(), w, "ext.bar");
    return rep;
}

SparseVec right_integral_bar_dual(const BarQuotient& bq, const Scalar& scale) {
    const int m = bq.dimbar;
    std::vector<SparseVec> rows;
    for (int b = 0; b < m; ++b) {
        std::vector<std::vector<std::pair<int, Scalar>>> eq(m);
        for (const auto& [jk, c] : bq.comult_bar.fiber(b)) eq[jk % m].emplace_back(jk / m, c);
        for (const auto& [k, u] : bq.coaug) eq[k].emplace_back(b, -u);
        for (auto& e : eq) {
            SparseVec row = collect(std::move(e));
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    Matrix sys(static_cast<int>(rows.size()), m);
    for (int i = 0; i < sys.rows(); ++i) sys.set_row(i, rows[i]);
    auto ns = null_space(sys);
    if (ns.size() != 1) throw std::runtime_error("right integral space of the bar dual is not one-dimensional");
    return scaled(ns[0], Scalar(m) * scale);
}

std::optional<SparseVec> relative_modular_function(const HopfInclusion& incl, const BarQuotient& bq,
                                                   const SparseVec& lambda) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    SparseVec lt = lift_lambda(bq, lambda);
    if (lt.empty()) return std::nullopt;
    int h0 = lt.front().first;
    Scalar l0 = lt.front().second;
    auto ik = embedded_basis(incl);
    SparseVec chi;
    for (int a = 0; a < K.dim; ++a) {
        Scalar v = evaluate(lt, H.mul(ik[a], H.basis(h0))) / l0;
        if (!v.is_zero()) chi.emplace_back(a, v);
    }
    for (int a = 0; a < K.dim; ++a) {
        Scalar ca = coeff(chi, a);
        for (int h = 0; h < H.dim; ++h)
            if (evaluate(lt, H.mul(ik[a], H.basis(h))) != ca * coeff(lt, h)) return std::nullopt;
    }
    if (!is_algebra_map(K, chi)) return std::nullopt;
    return chi;
}

std::optional<SparseVec> check_integral_type(const HopfInclusion& incl, const BarQuotient& bq,
                                             const SparseVec& lambda) {
    const FinHopf& H = *incl.H;
    SparseVec lt = lift_lambda(bq, lambda);
    Matrix sys(H.dim, H.dim);
    for (int h = 0; h < H.dim; ++h) {
        SparseVec row;
        for (int a = 0; a < H.dim; ++a) {
            Scalar v = evaluate(lt, H.mul_basis(a, h));
            if (!v.is_zero()) row.emplace_back(a, v);
        }
        sys.set_row(h, std::move(row));
    }
    auto sol = solve_linear(sys, H.counit);
    if (!sol.consistent) return std::nullopt;
    return sol.particular;
}

FrobeniusDecision is_frobenius_extension(const HopfInclusion& incl) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    BarQuotient bq = bar_quotient(incl);
    SparseVec lambda = right_integral_bar_dual(bq);
    auto chi = relative_modular_function(incl, bq, lambda);
    if (!chi) throw std::runtime_error("no relative modular function for " + incl.name);
    FrobeniusDecision d;
    d.chi = *chi;
    d.alpha_H = distinguished_grouplike(H);
    d.alpha_K = distinguished_grouplike(K);
    auto ik = embedded_basis(incl);
    SparseVec restricted, alpha_ks;
    for (int a = 0; a < K.dim; ++a) {
        Scalar v = evaluate(d.alpha_H, ik[a]);
        if (!v.is_zero()) restricted.emplace_back(a, v);
        Scalar s = evaluate(d.alpha_K, K.S(K.basis(a)));
        if (!s.is_zero()) alpha_ks.emplace_back(a, s);
    }
    d.via_chi = d.chi == K.counit;
    d.via_alpha = restricted == d.alpha_K;
    d.chi_convolution_identity = convolve(K, restricted, alpha_ks) == d.chi;
    d.frobenius = d.via_chi;
    if (d.via_chi != d.via_alpha)
        throw std::logic_error("internal inconsistency: chi = eps and alpha_H|K = alpha_K disagree for " +
                               incl.name);
    return d;
}

FreeBasis free_basis(const HopfInclusion& incl, FreeSide side) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    auto ik = embedded_basis(incl);
    auto gen = [&](int h, int a) {
        return side == FreeSide::Left ? H.mul(ik[a], H.basis(h)) : H.mul(H.basis(h), ik[a]);
    };
    Echelon span(H.dim);
    FreeBasis fb;
    for (int c = 0; c < H.dim && !span.full(); ++c) {
        if (span.contains(H.basis(c))) continue;
        fb.elems.push_back(c);
        for (int a = 0; a < K.dim; ++a) span.add(gen(c, a));
    }
    const int r = static_cast<int>(fb.elems.size());
    if (!span.full() || r * K.dim != H.dim) throw std::runtime_error("free basis not found along declared order");
    std::vector<SparseVec> cols;
    for (int h : fb.elems)
        for (int a = 0; a < K.dim; ++a) cols.push_back(gen(h, a));
    auto inv = inverse(Matrix::from_columns(H.dim, cols));
    if (!inv) throw std::runtime_error("free basis not found along declared order");
    fb.decomp = *inv;
    return fb;
}

std::optional<Matrix> frobenius_morphism(const HopfInclusion& incl, const BarQuotient& bq, const SparseVec& lambda) {
    const FinHopf& H = *incl.H;
    const int n = H.dim;
    SparseVec lt = lift_lambda(bq, lambda);
    std::vector<SparseVec> cols(n);
    parallel_for(n, [&](int h) {
        std::vector<std::pair<int, Scalar>> raw;
        for (const auto& [jk, c] : H.delta_basis(h)) {
            Scalar v = coeff(lt, jk / n);
            if (!v.is_zero()) raw.emplace_back(jk % n, c * v);
        }
        cols[h] = collect(std::move(raw));
    });
    return solve_multi(incl.embed, Matrix::from_columns(n, cols));
}

Report verify_frobenius_morphism(const HopfInclusion& incl, const Matrix& tr) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    auto ik = embedded_basis(incl);
    auto tcols = tr.columns();
    Report rep;
    rep.title = "frobenius morphism " + incl.name;
    std::string wl, wr;
    for (int h = 0; h < H.dim && (wl.empty() || wr.empty()); ++h)
        for (int a = 0; a < K.dim; ++a) {
            if (wl.empty() && tr.apply(H.mul(ik[a], H.basis(h))) != K.mul(K.basis(a), tcols[h]))
                wl = kbasis_witness(K, H, a, h);
            if (wr.empty() && tr.apply(H.mul(H.basis(h), ik[a])) != K.mul(tcols[h], K.basis(a)))
                wr = kbasis_witness(K, H, a, h);
        }
    rep.add("left_K_linear", wl.empty(), wl, "ext.trace");
    rep.add("right_K_linear", wr.empty(), wr, "ext.trace");

    std::vector<SparseVec> itr(H.dim), id(H.dim);
    for (int h = 0; h < H.dim; ++h) {
        itr[h] = incl.iota(tcols[h]);
        id[h] = H.basis(h);
    }
    std::string wc;
    for (int h = 0; h < H.dim && wc.empty(); ++h)
        if (apply2(itr, id, H.dim, H.dim, H.delta_basis(h)) != H.delta(itr[h])) wc = H.labels[h];
    rep.add("right_comodule", wc.empty(), wc, "ext.trace");
    return rep;
}

std::vector<SparseVec> dual_bases(const HopfInclusion& incl, const Matrix& tr, const FreeBasis& left) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    const int r = static_cast<int>(left.elems.size());
    std::vector<SparseVec> cols(H.dim);
    for (int a = 0; a < H.dim; ++a) {
        SparseVec col;
        for (int j = 0; j < r; ++j)
            for (const auto& [c, v] : tr.apply(H.mul_basis(left.elems[j], a))) col.emplace_back(j * K.dim + c, v);
        cols[a] = std::move(col);
    }
    Matrix sys = Matrix::from_columns(r * K.dim, cols);
    std::vector<SparseVec> rhs(r);
    for (int i = 0; i < r; ++i)
        for (const auto& [c, v] : K.unit) rhs[i].emplace_back(i * K.dim + c, v);
    auto sol = solve_multi(sys, Matrix::from_columns(r * K.dim, rhs));
    if (!sol) throw std::runtime_error("dual bases do not exist for " + incl.name);
    return sol->columns();
}

bool is_central_extension(const HopfInclusion& incl, const BarQuotient& bq, const SparseVec& lambda, Report* rep) {
    const FinHopf& H = *incl.H;
    const int n = H.dim;
    SparseVec lt = lift_lambda(bq, lambda);
    std::string w;
    for (int h = 0; h < n && w.empty(); ++h) {
        std::vector<std::pair<int, Scalar>> l, r;
        for (const auto& [jk, c] : H.delta_basis(h)) {
            Scalar vj = coeff(lt, jk / n), vk = coeff(lt, jk % n);
            if (!vj.is_zero()) l.emplace_back(jk % n, c * vj);
            if (!vk.is_zero()) r.emplace_back(jk / n, c * vk);
        }
        if (collect(l) != collect(r)) w = H.labels[h];
    }
    bool central = w.empty();
    if (rep) {
        auto tr = frobenius_morphism(incl, bq, lambda);
        if (tr) {
            // Left comodule property of tr, equivalent to centrality given the right one.
            auto tcols = tr->columns();
            std::vector<SparseVec> itr(n), id(n);
            for (int h = 0; h < n; ++h) {
                itr[h] = incl.iota(tcols[h]);
                id[h] = H.basis(h);
            }
            std::string wb;
            for (int h = 0; h < n && wb.empty(); ++h)
                if (apply2(id, itr, n, n, H.delta_basis(h)) != H.delta(itr[h])) wb = H.labels[h];
            rep->add("central_tests_agree", wb.empty() == central, wb.empty() ? "bicomodule" : wb, "ext.central");
        }
    }
    return central;
}

bool is_normal_subalgebra(const HopfInclusion& incl) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    const int n = H.dim;
    auto ik = embedded_basis(incl);
    Echelon kspan(n);
    for (const auto& v : ik) kspan.add(v);
    auto bad = first_failure<int>(n, [&](int h) -> std::optional<int> {
        const SparseVec& d = H.delta_basis(h);
        for (int a = 0; a < K.dim; ++a) {
            std::vector<std::pair<int, Scalar>> l, r;
            for (const auto& [jk, c] : d) {
                SparseVec s1 = H.S(H.basis(jk / n)), s2 = H.S(H.basis(jk % n));
                for (const auto& [p, cp] : H.mul({H.basis(jk / n), ik[a], s2})) l.emplace_back(p, c * cp);
                for (const auto& [p, cp] : H.mul({s1, ik[a], H.basis(jk % n)})) r.emplace_back(p, c * cp);
            }
            if (!kspan.contains(collect(l)) || !kspan.contains(collect(r))) return a;
        }
        return std::nullopt;
    });
    return !bad;
}

bool bar_dual_is_unimodular(const BarQuotient& bq, const SparseVec& lambda) {
    const int m = bq.dimbar;
    for (int b = 0; b < m; ++b) {
        std::vector<std::pair<int, Scalar>> raw;
        for (const auto& [jk, c] : bq.comult_bar.fiber(b)) {
            Scalar v = coeff(lambda, jk % m);
            if (!v.is_zero()) raw.emplace_back(jk / m, c * v);
        }
        if (collect(std::move(raw)) != scaled(bq.coaug, coeff(lambda, b))) return false;
    }
    return true;
}

std::optional<Scalar> fms_lambda_ratio(const HopfInclusion& incl, const BarQuotient& bq, const SparseVec& lambda) {
    const FinHopf& K = *incl.K;
    const FinHopf& H = *incl.H;
    SparseVec lh = dual_right_integral(H);
    auto lk = integral_space(K, Side::Left);
    if (lk.size() != 1) return std::nullopt;
    SparseVec big = incl.iota(lk[0]);
    for (const auto& w : bq.kernel_basis)
        if (!evaluate(lh, H.mul(w, big)).is_zero()) return std::nullopt;
    SparseVec lp;
    for (int b = 0; b < bq.dimbar; ++b) {
        Scalar v = evaluate(lh, H.mul(H.basis(bq.reps[b]), big));
        if (!v.is_zero()) lp.emplace_back(b, v);
    }
    if (lp.empty() || lambda.empty()) return std::nullopt;
    Scalar ratio = lp.front().second / coeff(lambda, lp.front().first);
    if (scaled(lambda, ratio) != lp) return std::nullopt;
    return ratio;
}

FrobeniusContext make_frobenius_context(const HopfInclusion& incl, const AnalysisOptions& opt) {
    FrobeniusContext ctx;
    ctx.incl = incl;
    ctx.bq = bar_quotient(incl);
    ctx.lambda = right_integral_bar_dual(ctx.bq, opt.lambda_scale);
    ctx.lambda_lift = lift_lambda(ctx.bq, ctx.lambda);
    ctx.decision = is_frobenius_extension(incl);
    if (!ctx.decision.frobenius) throw std::runtime_error("extension " + incl.name + " is not Frobenius");
    ctx.Lambda = check_integral_type(incl, ctx.bq, ctx.lambda);
    auto tr = frobenius_morphism(incl, ctx.bq, ctx.lambda);
    if (!tr) throw std::runtime_error("Frobenius morphism image leaves K for " + incl.name);
    ctx.tr = *tr;
    ctx.left = free_basis(incl, FreeSide::Left);
    ctx.right = free_basis(incl, FreeSide::Right);
    ctx.r = static_cast<int>(ctx.left.elems.size());
    ctx.delta = dual_bases(incl, ctx.tr, ctx.left);
    ctx.central = is_central_extension(incl, ctx.bq, ctx.lambda);
    return ctx;
}

SparseVec balanced_coords(const FrobeniusContext& ctx, const SparseVec& x, const SparseVec& w, int dimV,
                          const std::function<SparseVec(const SparseVec&, const SparseVec&)>& act) {
    const int dk = ctx.K().dim;
    std::vector<std::pair<int, Scalar>> raw;
    for (const auto& [ja, c] : ctx.right.decomp.apply(x))
        for (const auto& [p, cp] : act(unit_vec(ja % dk), w)) raw.emplace_back((ja / dk) * dimV + p, c * cp);
    return collect(std::move(raw));
}

Report verify_dual_bases(const FrobeniusContext& ctx) {
    const FinHopf& H = ctx.H();
    Report rep;
    rep.title = "dual bases " + ctx.incl.name;
    std::string wl, wr, wb;
    auto act = [&](const SparseVec& k, const SparseVec& v) { return H.mul(ctx.incl.iota(k), v); };
    for (int h = 0; h < H.dim; ++h) {
        SparseVec e = H.basis(h);
        SparseVec l, r, bl, br;
        for (int i = 0; i < ctx.r; ++i) {
            SparseVec hi = H.basis(ctx.left.elems[i]);
            l = l + H.mul(ctx.tr_in_H(H.mul(e, ctx.delta[i])), hi);
            r = r + H.mul(ctx.delta[i], ctx.tr_in_H(H.mul(hi, e)));
            bl = bl + balanced_coords(ctx, ctx.delta[i], H.mul(hi, e), H.dim, act);
            br = br + balanced_coords(ctx, H.mul(e, ctx.delta[i]), hi, H.dim, act);
        }
        if (wl.empty() && l != e) wl = H.labels[h];
        if (wr.empty() && r != e) wr = H.labels[h];
        if (wb.empty() && bl != br) wb = H.labels[h];
    }
    rep.add("left_expansion", wl.empty(), wl, "ext.dual_bases");
    rep.add("right_expansion", wr.empty(), wr, "ext.dual_bases");
    rep.add("balanced_casimir", wb.empty(), wb, "ext.dual_bases");
    return rep;
}

AnalysisResult analyze_extension(const HopfInclusion& incl, const AnalysisOptions& opt) {
    AnalysisResult res;
    res.report.title = "analyze " + incl.name;
    res.report.merge(verify_hopf(*incl.K), "K");
    res.report.merge(verify_hopf(*incl.H), "H");
    res.report.merge(verify_inclusion(incl), "inclusion");
    if (!res.report.all_pass()) return res;
    BarQuotient bq = bar_quotient(incl);
    res.report.merge(verify_bar_quotient(incl, bq), "bar");
    FrobeniusDecision d = is_frobenius_extension(incl);
    res.report.add("chi_convolution_identity", d.chi_convolution_identity, "chi", "ext.modular");
    if (!d.frobenius) return res;
    res.ctx = make_frobenius_context(incl, opt);
    res.report.merge(verify_frobenius_morphism(incl, res.ctx->tr), "trace");
    res.report.merge(verify_dual_bases(*res.ctx), "dual_bases");
    is_central_extension(incl, res.ctx->bq, res.ctx->lambda, &res.report);
    if (auto ratio = fms_lambda_ratio(incl, res.ctx->bq, res.ctx->lambda))
        res.report.add("fms_lambda_proportional", true);
    else
        res.report.add("fms_lambda_proportional", false, "lambda'", "ext.fms");
    return res;
}

}  // namespace hopfrob
