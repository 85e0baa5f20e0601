#include <catch2/catch_amalgamated.hpp>

#include "hopfrob/builders.hpp"
#include "hopfrob/linsolve.hpp"
#include "hopfrob/yd.hpp"

using namespace hopfrob;

namespace {

const FrobeniusContext& h8_ctx() {
    static const FrobeniusContext ctx = make_frobenius_context(kac_paljutkin_inclusion());
    return ctx;
}

}  // namespace

TEST_CASE("the sixteen one-dimensional YD modules over kK", "[yetter_drinfeld]") {
    auto simples = klein_yd_simples(klein_four());
    REQUIRE(simples.size() == 16);
    for (const auto& s : simples) CHECK(verify_yd(s).all_pass());
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = i + 1; j < simples.size(); ++j)
            CHECK_FALSE(is_yd_map(simples[i], simples[j], Matrix::identity(1)));
}

TEST_CASE("a non-YD coaction is rejected", "[yetter_drinfeld]") {
    // Over H8 a grouplike coaction by x on V2 breaks the YD condition.
    HopfPtr h8 = kac_paljutkin();
    YDModule bad{h8_v2(h8), grouplike_coaction(*h8, h8->index_of("x"), 2)};
    Report r = verify_yd(bad);
    CHECK_FALSE(r.all_pass());
    for (const Check* c : r.failures()) CHECK_FALSE(c->witness.empty());
}

TEST_CASE("braidings are invertible YD maps and satisfy the hexagons", "[yetter_drinfeld][property]") {
    auto s = klein_yd_simples(klein_four());
    for (std::size_t i = 0; i < s.size(); i += 3)
        for (std::size_t j = 0; j < s.size(); j += 5) {
            Matrix psi = yd_braiding(s[i], s[j]);
            auto inv = inverse(psi);
            REQUIRE(inv);
            CHECK(is_yd_map(yd_tensor(s[i], s[j]), yd_tensor(s[j], s[i]), psi));
            CHECK(is_yd_map(yd_tensor(s[j], s[i]), yd_tensor(s[i], s[j]), *inv));
            for (std::size_t k = 0; k < s.size(); k += 7) CHECK(verify_hexagons(s[i], s[j], s[k]).all_pass());
        }
}

TEST_CASE("braiding on a two-dimensional YD module over H8", "[yetter_drinfeld]") {
    const auto& ctx = h8_ctx();
    auto s = klein_yd_simples(ctx.incl.K);
    YDModule big = z_induce(ctx, s[5]);
    CHECK(verify_yd(big).all_pass());
    CHECK(verify_hexagons(big, big, z_induce(ctx, s[0])).all_pass());
}

TEST_CASE("Z(Ind) forgets to Ind", "[yetter_drinfeld][property]") {
    const auto& ctx = h8_ctx();
    for (const auto& v : klein_yd_simples(ctx.incl.K)) {
        INFO(v.name());
        YDModule z = z_induce(ctx, v);
        HModule ind = induce(ctx, v.mod);
        REQUIRE(z.dim() == ind.dim);
        for (int a = 0; a < ctx.H().dim; ++a) CHECK(z.mod.action[a] == ind.action[a]);
        CHECK(verify_yd(z).all_pass());
    }
}

TEST_CASE("the two coaction formulas agree on central extensions", "[yetter_drinfeld][property]") {
    const auto& ctx = h8_ctx();
    for (const auto& v : klein_yd_simples(ctx.incl.K))
        CHECK(induced_coaction(ctx, v) == induced_coaction_via_projections(ctx, v));
    FrobeniusContext dd = make_frobenius_context(drinfeld_double(cyclic_group_algebra(2)));
    for (const auto& v : {trivial_yd(dd.incl.K), YDModule{trivial_module(dd.incl.K), grouplike_coaction(dd.K(), 1, 1)}})
        CHECK(induced_coaction(dd, v) == induced_coaction_via_projections(dd, v));
}

TEST_CASE("z_induce refuses non-central extensions", "[yetter_drinfeld]") {
    HopfPtr u3 = small_quantum_sl2(3);
    FrobeniusContext ctx = make_frobenius_context(sl2_cartan(u3, 3));
    REQUIRE_FALSE(ctx.central);
    CHECK_THROWS_AS(z_induce(ctx, trivial_yd(ctx.incl.K)), std::invalid_argument);
    // Both formulas remain computable; their disagreement is what centrality rules out.
    Matrix a = induced_coaction(ctx, trivial_yd(ctx.incl.K));
    Matrix b = induced_coaction_via_projections(ctx, trivial_yd(ctx.incl.K));
    CHECK(a.rows() == b.rows());
    CHECK(a != b);
}

TEST_CASE("braided Frobenius monoidal on all pairs of simples", "[yetter_drinfeld]") {
    const auto& ctx = h8_ctx();
    auto s = klein_yd_simples(ctx.incl.K);
    for (const auto& x : s)
        for (const auto& y : s) {
            Report r = verify_braided_frobenius(ctx, x, y);
            if (!r.all_pass()) FAIL(x.name() << " " << y.name() << "\n" << r.text());
        }
}
