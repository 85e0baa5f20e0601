#pragma once

#include <optional>
#include <vector>

#include "hopfrob/extension.hpp"
#include "hopfrob/module.hpp"

namespace hopfrob {

// Ind(V) = H (x)_K V on the right-free basis b_i: carrier index i * dim V + a.
HModule induce(const FrobeniusContext& ctx, const HModule& v);
// Coordinates of x (x)_K w in Ind(V).
SparseVec induced_element(const FrobeniusContext& ctx, const HModule& v, const SparseVec& x, const SparseVec& w);
// CoInd(V) = Hom_K(H, V), coordinates f(h_i) over the left-free basis h_i.
HModule coinduce(const FrobeniusContext& ctx, const HModule& v);

// theta(h (x) v) = (g -> tr(g h) v) and its inverse f -> sum_i delta_i (x) f(h_i).
struct ThetaPair {
    Matrix theta;
    Matrix theta_inv;
};
ThetaPair theta_iso(const FrobeniusContext& ctx, const HModule& v);
Report verify_theta(const FrobeniusContext& ctx, const HModule& v);

// Units and counits for G = Res and F = Ind.  v is a K-module, w an H-module.
struct AdjunctionMaps {
    Matrix unit_gf;    // W -> Ind Res W,   w -> sum_i delta_i (x) h_i w
    Matrix counit_gf;  // Res Ind V -> V,   h (x) v -> tr(h) v
    Matrix unit_fg;    // V -> Res Ind V,   v -> 1 (x) v
    Matrix counit_fg;  // Ind Res W -> W,   h (x) w -> h w
};
AdjunctionMaps adjunction_maps(const FrobeniusContext& ctx, const HModule& v, const HModule& w);
// Module-map property of the four maps and both triangle identities of each adjunction.
Report verify_adjunctions(const FrobeniusContext& ctx, const HModule& v, const HModule& w);

// F(f) for a K-module map f.
Matrix induce_map(const FrobeniusContext& ctx, const Matrix& f);

// lax_{V,U} : Ind V (x) Ind U -> Ind(V (x) U) and lax_0 : 1 -> Ind(1).
Matrix lax(const FrobeniusContext& ctx, const HModule& v, const HModule& u);
Matrix lax0(const FrobeniusContext& ctx);
// oplax_{V,U} : Ind(V (x) U) -> Ind V (x) Ind U and oplax_0 : Ind(1) -> 1.
Matrix oplax(const FrobeniusContext& ctx, const HModule& v, const HModule& u);
Matrix oplax0(const FrobeniusContext& ctx);

// Associativity and unitality of lax and oplax over all triples (pairs) of the list.
Report verify_lax_oplax(const FrobeniusContext& ctx, const std::vector<HModule>& modules);
// Both Frobenius compatibility squares for the triple (X, Y, Z).
Report verify_frobenius_monoidal(const FrobeniusContext& ctx, const HModule& x, const HModule& y, const HModule& z);

// Projection formula morphisms for an H-module W and a K-module V.
struct ProjectionMaps {
    Matrix lproj_gf;  // W (x) Ind V -> Ind(Res W (x) V)
    Matrix lproj_fg;  // Ind(Res W (x) V) -> W (x) Ind V
    Matrix rproj_gf;  // Ind V (x) W -> Ind(V (x) Res W)
    Matrix rproj_fg;  // Ind(V (x) Res W) -> Ind V (x) W
    Matrix lproj_fg_inv;  // closed form w (x) (h (x) v) -> h_2 (x) (S^-1(h_1) w (x) v)
    Matrix rproj_fg_inv;  // closed form (h (x) v) (x) w -> h_1 (x) (v (x) S(h_2) w)
};
ProjectionMaps projection_morphisms(const FrobeniusContext& ctx, const HModule& w, const HModule& v);
// Checks "left_pair_inverse", "right_pair_inverse", "lproj_fg_closed_inverse", "rproj_fg_closed_inverse".
Report verify_projections(const FrobeniusContext& ctx, const HModule& w, const HModule& v);

// lax_{V,U} o oplax_{V,U} = beta id on Ind(V (x) U); beta when it is a scalar multiple.
std::optional<Scalar> separability_scalar(const FrobeniusContext& ctx, const HModule& v, const HModule& u);
// True when every sampled pair gives a nonzero scalar multiple of the identity; beta
// receives the common scalar when all pairs agree.
bool is_separable_functor(const FrobeniusContext& ctx, const std::vector<std::pair<HModule, HModule>>& sample,
                          std::optional<Scalar>* beta = nullptr);

}  // namespace hopfrob
