#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfrob/induction.hpp"

namespace hopfrob {

// Left-left Yetter-Drinfeld module: coaction v -> v^(-1) (x) v^(0) as a
// (dim H * d) x d matrix with row index h * d + a.
struct YDModule {
    HModule mod;
    Matrix coaction;

    int dim() const { return mod.dim; }
    const FinHopf& over() const { return *mod.over; }
    const std::string& name() const { return mod.name; }
};

// Comodule axioms and the YD condition, exhaustive over basis pairs.
Report verify_yd(const YDModule& m);

// Coaction v -> g (x) v for a grouplike basis element g.
Matrix grouplike_coaction(const FinHopf& h, int g, int dim);
// Coaction v -> 1 (x) v.
Matrix trivial_coaction(const FinHopf& h, int dim);
YDModule trivial_yd(const HopfPtr& h);
// One-dimensional YD module over a commutative group algebra: character and degree.
YDModule one_dim_yd(const HopfPtr& h, const SparseVec& character, int degree, std::string name = "");
// k^g_{ex,ey} over kK; degree given by label.
YDModule klein_yd(const HopfPtr& kk, int ex, int ey, const std::string& degree);
// All sixteen one-dimensional YD modules over kK.
std::vector<YDModule> klein_yd_simples(const HopfPtr& kk);

YDModule yd_tensor(const YDModule& m, const YDModule& n);
// Psi(v (x) w) = v^(-1) w (x) v^(0) as a map M (x) N -> N (x) M.
Matrix yd_braiding(const YDModule& m, const YDModule& n);
bool is_comodule_map(const YDModule& m, const YDModule& n, const Matrix& f);
bool is_yd_map(const YDModule& m, const YDModule& n, const Matrix& f);
// Both hexagon identities for the triple, and invertibility of the braidings.
Report verify_hexagons(const YDModule& u, const YDModule& v, const YDModule& w);

// Lift of Ind to YD modules: delta(h (x) v) = h_1 v^(-1) S(h_3) (x) h_2 (x) v^(0).
// Throws std::invalid_argument when the extension is not central.
YDModule z_induce(const FrobeniusContext& ctx, const YDModule& v);
// The same formula evaluated without the centrality guard.
Matrix induced_coaction(const FrobeniusContext& ctx, const YDModule& v);
// Coaction transported along rproj^{G-|F} and lproj^{F-|G}^-1; agrees with
// induced_coaction for central extensions.
Matrix induced_coaction_via_projections(const FrobeniusContext& ctx, const YDModule& v);

// lax_{Y,X} Psi_{FX,FY} = F(Psi_{X,Y}) lax_{X,Y} and
// oplax_{Y,X} F(Psi_{X,Y}) = Psi_{FX,FY} oplax_{X,Y}, plus YD-morphism checks.
Report verify_braided_frobenius(const FrobeniusContext& ctx, const YDModule& x, const YDModule& y);

}  // namespace hopfrob
