#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hopfrob/yd.hpp"

namespace hopfrob {

// Algebra object: mult is d x d^2 on the carrier index a * d + b, unit is d x 1.
// When braided is false the coaction of the carrier is unused and may be empty.
struct AlgObject {
    YDModule carrier;
    bool braided = true;
    Matrix mult;
    Matrix unit;

    int dim() const { return carrier.dim(); }
    const std::string& name() const { return carrier.name(); }
};

// Frobenius object: comult is d^2 x d, counit is 1 x d.
struct FrobObject : AlgObject {
    Matrix comult;
    Matrix counit;
};

// Associativity, unitality and the morphism property of the structure maps.
Report verify_algebra_object(const AlgObject& a);
// Algebra checks plus coassociativity, counitality and both Frobenius squares.
Report verify_frobenius_object(const FrobObject& f);

// 1 with all structure maps the scalar 1.
FrobObject trivial_frobenius(const HopfPtr& h);

// m_F = F(m) lax, u_F = F(u) lax_0; Delta_F = oplax F(Delta), eps_F = oplax_0 F(eps).
// Braided objects are pushed along Z(Ind) and need a central extension.
AlgObject push_algebra(const FrobeniusContext& ctx, const AlgObject& a);
FrobObject push_coalgebra(const FrobeniusContext& ctx, const FrobObject& a);
FrobObject push_frobenius(const FrobeniusContext& ctx, const FrobObject& a);

// New basis given by the columns of p, in the old coordinates.
FrobObject change_basis(const FrobObject& f, const Matrix& p, std::string name = "");

// A_{n,ex,ey} in YD(kK) on {e_1, e_n}: deg e_m = m, e_n carries k(ex,ey),
// e_m e_m' = e_mm', Delta(e_m) = e_1 (x) e_m + e_n (x) e_nm.  n is "x", "y" or "xy".
FrobObject build_group_etale(const HopfPtr& kk, const std::string& n, int ex, int ey);
// B_{n,ex,ey} in YD(H8) on {b_11, b_1n, b_z1, b_zn} from closed formulas, for the
// extension kK in H8 with t = tr(1): products carry t, the unit carries 1/t.
FrobObject b_algebra(const HopfPtr& h8, const std::string& n, int ex, int ey, const Scalar& t);
// Z(Ind)(1) over H8 on {1_A, a} from closed formulas at trace normalization t.
FrobObject zone_h(const HopfPtr& h8, const Scalar& t);
// push_frobenius(1) rewritten in the basis 1_A = unit, a = (1 - z) (x) 1 / t.
FrobObject zone_h_pushed(const FrobeniusContext& ctx);

bool is_commutative_object(const AlgObject& a);
// (beta_A, beta_1) with m Delta = beta_A id and eps u = beta_1, both nonzero.
std::optional<std::pair<Scalar, Scalar>> is_special(const FrobObject& f);
// dim {v : h v = eps(h) v, delta(v) = 1 (x) v}.
int invariant_dimension(const AlgObject& a);
bool is_connected(const AlgObject& a);

struct RigidReport {
    bool frobenius = false;
    bool commutative = false;
    bool special = false;
    bool connected = false;
    std::optional<std::pair<Scalar, Scalar>> betas;
    int invariant_dim = 0;
    Report details;

    bool rigid() const { return frobenius && commutative && special && connected; }
};
RigidReport is_rigid_frobenius(const FrobObject& f);

}  // namespace hopfrob
