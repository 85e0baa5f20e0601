#include <catch2/catch_amalgamated.hpp>

#include "hopfrob/builders.hpp"
#include "hopfrob/frob.hpp"

using namespace hopfrob;

namespace {

const FrobeniusContext& h8_ctx() {
    static const FrobeniusContext ctx = make_frobenius_context(kac_paljutkin_inclusion());
    return ctx;
}

struct Triple {
    std::string n;
    int ex, ey;
};

std::vector<Triple> triples() {
    std::vector<Triple> out;
    for (const char* n : {"x", "y", "xy"})
        for (int ex : {1, -1})
            for (int ey : {1, -1}) out.push_back({n, ex, ey});
    return out;
}

// chi(n) for the character k(ex, ey) evaluated at the grouplike n.
int chi_at(const Triple& t) {
    if (t.n == "x") return t.ex;
    if (t.n == "y") return t.ey;
    return t.ex * t.ey;
}

bool same(const FrobObject& a, const FrobObject& b) {
    if (a.mult != b.mult || a.unit != b.unit || a.comult != b.comult || a.counit != b.counit) return false;
    if (a.carrier.coaction != b.carrier.coaction) return false;
    for (std::size_t i = 0; i < a.carrier.mod.action.size(); ++i)
        if (a.carrier.mod.action[i] != b.carrier.mod.action[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("trivial and etale objects over kK", "[frob_objects]") {
    HopfPtr kk = klein_four();
    FrobObject one = trivial_frobenius(kk);
    CHECK(verify_frobenius_object(one).all_pass());
    CHECK(is_special(one) == std::make_pair(Scalar(1), Scalar(1)));
    for (const auto& t : triples()) {
        INFO(t.n << t.ex << t.ey);
        FrobObject a = build_group_etale(kk, t.n, t.ex, t.ey);
        CHECK(verify_frobenius_object(a).all_pass());
        CHECK(is_special(a) == std::make_pair(Scalar(2), Scalar(1)));
        CHECK(is_connected(a));
        // Psi(e_n (x) e_n) = chi(n) e_n (x) e_n, so commutativity is exactly chi(n) = 1.
        CHECK(is_commutative_object(a) == (chi_at(t) == 1));
    }
}

TEST_CASE("Z(Ind)(1) over H8 matches its closed form", "[frob_objects]") {
    const auto& ctx = h8_ctx();
    FrobObject pushed = zone_h_pushed(ctx);
    FrobObject direct = zone_h(ctx.incl.H, Scalar(2));
    CHECK(same(pushed, direct));
    const FinHopf& H = ctx.H();
    // Delta(a) = 1 (x) a + a (x) 1 and Delta(1) = 1 (x) 1 + a (x) a at t = 2.
    Matrix d = pushed.comult;
    CHECK(d.col(1) == collect({{1, Scalar(1)}, {2, Scalar(1)}}));
    CHECK(d.col(0) == collect({{0, Scalar(1)}, {3, Scalar(1)}}));
    CHECK(pushed.counit.row(0) == unit_vec(0));
    CHECK(pushed.carrier.mod.action[H.index_of("z")].at(1, 1) == Scalar(-1));
    CHECK(pushed.carrier.mod.action[H.index_of("x")].at(1, 1) == Scalar(1));
    CHECK(pushed.carrier.mod.action[H.index_of("y")].at(1, 1) == Scalar(1));
    CHECK(pushed.carrier.coaction == grouplike_coaction(H, 0, 2));
    RigidReport r = is_rigid_frobenius(pushed);
    CHECK(r.rigid());
    CHECK(r.betas == std::make_pair(Scalar(2), Scalar(1)));
}

TEST_CASE("pushed etale objects equal the direct B constructor", "[frob_objects]") {
    const auto& ctx = h8_ctx();
    for (const auto& t : triples()) {
        INFO(t.n << t.ex << t.ey);
        FrobObject a = build_group_etale(ctx.incl.K, t.n, t.ex, t.ey);
        FrobObject b = push_frobenius(ctx, a);
        CHECK(same(b, b_algebra(ctx.incl.H, t.n, t.ex, t.ey, Scalar(2))));
        CHECK(verify_frobenius_object(b).all_pass());
    }
}

TEST_CASE("pushing preserves the Frobenius structure and commutativity", "[frob_objects][property]") {
    const auto& ctx = h8_ctx();
    for (const auto& t : triples()) {
        FrobObject a = build_group_etale(ctx.incl.K, t.n, t.ex, t.ey);
        FrobObject b = push_frobenius(ctx, a);
        CHECK(verify_frobenius_object(b).all_pass());
        if (is_commutative_object(a)) CHECK(is_commutative_object(b));
        RigidReport r = is_rigid_frobenius(b);
        CHECK(r.frobenius);
        CHECK(r.special);
        CHECK(r.connected);
        CHECK(r.invariant_dim == 1);
        // beta_B = t beta_A and beta_1 = 2 / t with t = tr(1) = 2.
        CHECK(r.betas == std::make_pair(Scalar(4), Scalar(1)));
        CHECK(r.commutative == (chi_at(t) == 1));
    }
}

TEST_CASE("the special scalars track the trace normalization", "[frob_objects][property]") {
    for (Scalar c : {Scalar(1), Scalar(7), Scalar(Rational(1, 2))}) {
        AnalysisOptions opt;
        opt.lambda_scale = c;
        FrobeniusContext ctx = make_frobenius_context(kac_paljutkin_inclusion(), opt);
        Scalar t = Scalar(2) * c;
        FrobObject b = push_frobenius(ctx, build_group_etale(ctx.incl.K, "x", 1, 1));
        CHECK(is_special(b) == std::make_pair(Scalar(2) * t, Scalar(2) / t));
        CHECK(same(b, b_algebra(ctx.incl.H, "x", 1, 1, t)));
        CHECK(same(zone_h_pushed(ctx), zone_h(ctx.incl.H, t)));
    }
}

TEST_CASE("non-special and non-connected objects are detected", "[frob_objects]") {
    HopfPtr kk = klein_four();
    FrobObject a = build_group_etale(kk, "x", 1, 1);
    // Scaling the counit alone breaks the Frobenius squares only through counitality.
    FrobObject broken = a;
    broken.counit = a.counit.scaled(Scalar(3));
    CHECK_FALSE(verify_frobenius_object(broken).all_pass());
    // The module-only trivial object over kK is connected; a direct sum of two copies is not.
    FrobObject one = trivial_frobenius(kk);
    FrobObject two = one;
    two.carrier.mod = direct_sum({one.carrier.mod, one.carrier.mod});
    two.carrier.coaction = grouplike_coaction(*kk, 0, 2);
    two.mult = Matrix(2, 4);
    two.mult.set(0, 0, Scalar(1));
    two.mult.set(1, 3, Scalar(1));
    two.unit = Matrix(2, 1);
    two.unit.set(0, 0, Scalar(1));
    two.unit.set(1, 0, Scalar(1));
    two.comult = Matrix(4, 2);
    two.comult.set(0, 0, Scalar(1));
    two.comult.set(3, 1, Scalar(1));
    two.counit = Matrix(1, 2);
    two.counit.set(0, 0, Scalar(1));
    two.counit.set(0, 1, Scalar(1));
    CHECK(verify_frobenius_object(two).all_pass());
    CHECK(invariant_dimension(two) == 2);
    CHECK_FALSE(is_connected(two));
    CHECK_FALSE(is_rigid_frobenius(two).rigid());
}

TEST_CASE("change of basis preserves the axioms", "[frob_objects]") {
    FrobObject a = build_group_etale(klein_four(), "y", -1, 1);
    Matrix p = Matrix::from_dense({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}});
    FrobObject b = change_basis(a, p);
    CHECK(verify_frobenius_object(b).all_pass());
    CHECK(is_special(b) == is_special(a));
}
