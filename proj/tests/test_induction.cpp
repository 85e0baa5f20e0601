#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "hopfrob/builders.hpp"
#include "hopfrob/induction.hpp"

using namespace hopfrob;
using hopfrob::testing::Gen;

namespace {

const FrobeniusContext& h8_ctx() {
    static const FrobeniusContext ctx = make_frobenius_context(kac_paljutkin_inclusion());
    return ctx;
}

std::vector<HModule> klein_chars(const HopfPtr& kk) {
    std::vector<HModule> out;
    for (int ex : {1, -1})
        for (int ey : {1, -1}) out.push_back(klein_character(kk, ex, ey));
    return out;
}

Scalar trace(const Matrix& m) {
    Scalar s(0);
    for (int i = 0; i < m.rows(); ++i) s += m.at(i, i);
    return s;
}

}  // namespace

TEST_CASE("induced H8 modules decompose as expected", "[induction]") {
    const auto& ctx = h8_ctx();
    HopfPtr h8 = ctx.incl.H, kk = ctx.incl.K;
    struct Case {
        int ex, ey;
        HModule expected;
    };
    std::vector<Case> cases{{1, 1, direct_sum({h8_v1(h8, 0), h8_v1(h8, 2)})},
                            {1, -1, h8_v2(h8)},
                            {-1, 1, h8_v2(h8)},
                            {-1, -1, direct_sum({h8_v1(h8, 1), h8_v1(h8, 3)})}};
    for (const auto& c : cases) {
        INFO(c.ex << "," << c.ey);
        HModule ind = induce(ctx, klein_character(kk, c.ex, c.ey));
        CHECK(verify_module(ind).all_pass());
        // Character oracle, independent of the intertwiner search.
        for (int a = 0; a < h8->dim; ++a) CHECK(trace(ind.action[a]) == trace(c.expected.action[a]));
        IsoResult iso = is_isomorphic(ind, c.expected);
        CHECK(iso.status == IsoStatus::Isomorphic);
    }
}

TEST_CASE("theta and the adjunctions", "[induction]") {
    const auto& ctx = h8_ctx();
    for (const auto& v : klein_chars(ctx.incl.K)) {
        CHECK(verify_theta(ctx, v).all_pass());
        CHECK(verify_module(coinduce(ctx, v)).all_pass());
        for (const auto& w : {h8_v2(ctx.incl.H), h8_v1(ctx.incl.H, 1)}) CHECK(verify_adjunctions(ctx, v, w).all_pass());
    }
}

TEST_CASE("theta is natural", "[induction][property]") {
    Gen g(71);
    const auto& ctx = h8_ctx();
    HModule v = direct_sum(klein_chars(ctx.incl.K));
    for (int it = 0; it < 3; ++it) {
        // Endomorphisms of a sum of distinct characters are diagonal.
        Matrix f(4, 4);
        for (int i = 0; i < 4; ++i) f.set(i, i, g.nonzero(4));
        REQUIRE(is_module_map(v, v, f));
        ThetaPair t = theta_iso(ctx, v);
        // CoInd(f) acts on the coordinates f(h_i) block-diagonally.
        Matrix coind_f = kron(Matrix::identity(static_cast<int>(ctx.left.elems.size())), f);
        CHECK(t.theta * induce_map(ctx, f) == coind_f * t.theta);
        CHECK((t.theta * t.theta_inv).is_identity());
    }
}

TEST_CASE("dual bases are balanced inside the induced carrier", "[induction][property]") {
    const auto& ctx = h8_ctx();
    const FinHopf& H = ctx.H();
    HModule reg = restrict_module(ctx.incl, regular_module(ctx.incl.H));
    for (int h = 0; h < H.dim; ++h) {
        SparseVec lhs, rhs;
        for (std::size_t i = 0; i < ctx.delta.size(); ++i) {
            SparseVec hi = H.basis(ctx.left.elems[i]);
            axpy(lhs, Scalar(1), induced_element(ctx, reg, ctx.delta[i], H.mul(hi, H.basis(h))));
            axpy(rhs, Scalar(1), induced_element(ctx, reg, H.mul(H.basis(h), ctx.delta[i]), hi));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lax and oplax structure on characters", "[induction]") {
    const auto& ctx = h8_ctx();
    auto chars = klein_chars(ctx.incl.K);
    CHECK(verify_lax_oplax(ctx, chars).all_pass());
    for (const auto& x : chars)
        for (const auto& y : chars) {
            CHECK(separability_scalar(ctx, x, y) == Scalar(2));
            for (const auto& z : chars) CHECK(verify_frobenius_monoidal(ctx, x, y, z).all_pass());
        }
    CHECK((oplax0(ctx) * lax0(ctx)).scalar_multiple_of_identity() == Scalar(1));
}

TEST_CASE("lax and oplax are natural", "[induction][property]") {
    Gen g(73);
    const auto& ctx = h8_ctx();
    HModule v = direct_sum({klein_character(ctx.incl.K, 1, -1), klein_character(ctx.incl.K, -1, -1)});
    HModule u = direct_sum({klein_character(ctx.incl.K, 1, 1), klein_character(ctx.incl.K, -1, 1)});
    for (int it = 0; it < 3; ++it) {
        Matrix f(2, 2), k(2, 2);
        for (int i = 0; i < 2; ++i) {
            f.set(i, i, g.nonzero(4));
            k.set(i, i, g.nonzero(4));
        }
        Matrix ff = induce_map(ctx, f), fk = induce_map(ctx, k), fvu = induce_map(ctx, kron(f, k));
        CHECK(lax(ctx, v, u) * kron(ff, fk) == fvu * lax(ctx, v, u));
        CHECK(oplax(ctx, v, u) * fvu == kron(ff, fk) * oplax(ctx, v, u));
    }
}

TEST_CASE("projection pairs are mutually inverse", "[induction]") {
    const auto& ctx = h8_ctx();
    for (const auto& v : klein_chars(ctx.incl.K))
        for (const auto& w : {h8_v2(ctx.incl.H), regular_module(ctx.incl.H)}) CHECK(verify_projections(ctx, w, v).all_pass());
}

TEST_CASE("rescaling lambda keeps every verdict", "[induction][property]") {
    AnalysisOptions opt;
    opt.lambda_scale = Scalar(7);
    FrobeniusContext scaled_ctx = make_frobenius_context(kac_paljutkin_inclusion(), opt);
    const auto& ctx = h8_ctx();
    auto chars = klein_chars(ctx.incl.K);
    for (const auto& x : chars)
        for (const auto& y : chars) {
            // lax uses tr and so scales by 7; oplax does not depend on tr.
            CHECK(lax(scaled_ctx, x, y) == lax(ctx, x, y).scaled(Scalar(7)));
            CHECK(oplax(scaled_ctx, x, y) == oplax(ctx, x, y));
            CHECK(separability_scalar(scaled_ctx, x, y) == Scalar(14));
            for (const auto& z : chars)
                CHECK(verify_frobenius_monoidal(scaled_ctx, x, y, z).all_pass() ==
                      verify_frobenius_monoidal(ctx, x, y, z).all_pass());
        }
}

TEST_CASE("separability over the Cartan inclusion fails", "[induction]") {
    HopfPtr u3 = small_quantum_sl2(3);
    FrobeniusContext ctx = make_frobenius_context(sl2_cartan(u3, 3));
    HModule triv = trivial_module(ctx.incl.K);
    std::optional<Scalar> beta;
    CHECK_FALSE(is_separable_functor(ctx, {{triv, triv}}, &beta));
}
