#include <catch2/catch_amalgamated.hpp>

#include "hopfrob/builders.hpp"

using namespace hopfrob;

namespace {

std::vector<HopfPtr> small_algebras() {
    return {ground_field(),   cyclic_group_algebra(2), cyclic_group_algebra(3), klein_four(),
            kac_paljutkin(),  taft(2),                 taft(3),                 taft(3, 2),
            drinfeld_double(cyclic_group_algebra(2)).H};
}

}  // namespace

TEST_CASE("builder algebras satisfy the Hopf axioms", "[hopf_core]") {
    for (const auto& h : small_algebras()) {
        INFO(h->name);
        Report r = verify_hopf(*h);
        CHECK(r.all_pass());
        CHECK(r.checks.size() >= 7);
    }
}

TEST_CASE("corrupted structure constants are caught with a witness", "[hopf_core]") {
    FinHopf h = *kac_paljutkin();
    // z z should be (1 + x + y - xy) / 2; drop the xy term.
    const int z = h.index_of("z");
    SparseVec zz = h.mul_basis(z, z);
    zz.pop_back();
    h.mult.set_fiber(z * h.dim + z, zz);
    Report r = verify_hopf(h);
    CHECK_FALSE(r.all_pass());
    for (const Check* c : r.failures()) CHECK_FALSE(c->witness.empty());
}

TEST_CASE("check_shape rejects inconsistent tensors", "[hopf_core]") {
    FinHopf h = *klein_four();
    h.dim = 5;
    CHECK_THROWS_AS(check_shape(h), std::invalid_argument);
}

TEST_CASE("dual_hopf is an involution", "[hopf_core][property]") {
    for (const auto& h : small_algebras()) {
        INFO(h->name);
        FinHopf d = dual_hopf(*h);
        CHECK(verify_hopf(d).all_pass());
        FinHopf dd = dual_hopf(d);
        CHECK(dd.mult == h->mult);
        CHECK(dd.comult == h->comult);
        CHECK(dd.unit == h->unit);
        CHECK(dd.counit == h->counit);
        CHECK(dd.antipode == h->antipode);
    }
}

TEST_CASE("integral spaces are one-dimensional", "[hopf_core][property]") {
    for (const auto& h : small_algebras()) {
        INFO(h->name);
        auto left = integral_space(*h, Side::Left), right = integral_space(*h, Side::Right);
        REQUIRE(left.size() == 1);
        REQUIRE(right.size() == 1);
        // Direct check of the defining identities on every basis element.
        for (int a = 0; a < h->dim; ++a) {
            CHECK(h->mul(h->basis(a), left[0]) == scaled(left[0], h->eps(h->basis(a))));
            CHECK(h->mul(right[0], h->basis(a)) == scaled(right[0], h->eps(h->basis(a))));
        }
    }
}

TEST_CASE("distinguished grouplike is an algebra map and detects unimodularity", "[hopf_core][property]") {
    for (const auto& h : small_algebras()) {
        INFO(h->name);
        SparseVec alpha = distinguished_grouplike(*h);
        std::string witness;
        CHECK(is_algebra_map(*h, alpha, &witness));
        CHECK(is_unimodular(*h) == (alpha == h->counit));
        // a Lambda = alpha(a) Lambda for the right integral.
        SparseVec lam = integral_space(*h, Side::Right)[0];
        for (int a = 0; a < h->dim; ++a) CHECK(h->mul(h->basis(a), lam) == scaled(lam, coeff(alpha, a)));
    }
}

TEST_CASE("unimodularity of the standard examples", "[hopf_core]") {
    CHECK(is_unimodular(*kac_paljutkin()));
    CHECK(is_unimodular(*klein_four()));
    CHECK_FALSE(is_unimodular(*taft(2)));
    CHECK_FALSE(is_unimodular(*taft(3)));
    // Taft algebras are self-dual, so their duals are not unimodular either.
    CHECK_FALSE(is_dual_unimodular(*taft(3)));
    CHECK(is_dual_unimodular(*klein_four()));
}

TEST_CASE("dual integrals satisfy their defining identities", "[hopf_core]") {
    for (const auto& h : small_algebras()) {
        INFO(h->name);
        SparseVec r = dual_right_integral(*h), l = dual_left_integral(*h);
        for (int a = 0; a < h->dim; ++a) {
            SparseVec x = h->basis(a);
            // (lambda (x) id) Delta(x) and (id (x) lambda) Delta(x)
            std::vector<std::pair<int, Scalar>> rr, ll;
            for (const auto& [jk, c] : h->delta(x)) {
                rr.emplace_back(jk % h->dim, c * coeff(r, jk / h->dim));
                ll.emplace_back(jk / h->dim, c * coeff(l, jk % h->dim));
            }
            CHECK(collect(rr) == scaled(h->unit, evaluate(r, x)));
            CHECK(collect(ll) == scaled(h->unit, evaluate(l, x)));
        }
    }
}

TEST_CASE("convolution with the counit is the identity", "[hopf_core][property]") {
    HopfPtr h = kac_paljutkin();
    SparseVec alpha = distinguished_grouplike(*h);
    CHECK(convolve(*h, h->counit, alpha) == alpha);
    CHECK(convolve(*h, alpha, h->counit) == alpha);
}

TEST_CASE("serial and parallel axiom reports agree", "[hopf_core][parallel]") {
    HopfPtr h = small_quantum_sl2(3);
    Report s = verify_hopf(*h, Exec::Serial, true), p = verify_hopf(*h, Exec::Parallel, true);
    CHECK(s.text() == p.text());
    CHECK(s.all_pass());
}
