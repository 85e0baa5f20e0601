#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfrob/hopf.hpp"

namespace hopfrob {

// Left module over a Hopf algebra: one dim x dim matrix per basis element.
struct HModule {
    HopfPtr over;
    int dim = 0;
    std::string name;
    std::vector<Matrix> action;

    Matrix act(const SparseVec& h) const;
    SparseVec act(const SparseVec& h, const SparseVec& v) const;
    SparseVec act_basis(int a, const SparseVec& v) const { return action[a].apply(v); }
};

// Exhaustive multiplicativity and unitality; throws on shape mismatch.
Report verify_module(const HModule& m);

HModule trivial_module(const HopfPtr& h);
HModule regular_module(const HopfPtr& h);
// One-dimensional module of an algebra map given as a covector.
HModule character_module(const HopfPtr& h, const SparseVec& character, std::string name = "");
// Module determined by the action of algebra generators; the action of every
// basis element is solved from products of generators.  Throws when the
// generators do not span H as an algebra.
HModule module_from_generators(const HopfPtr& h, const std::vector<int>& gens, const std::vector<Matrix>& images,
                               std::string name = "");
HModule direct_sum(const std::vector<HModule>& parts);

// h (v (x) w) = h_1 v (x) h_2 w, index i_V * dim W + i_W.
HModule tensor_modules(const HModule& m, const HModule& n);
HModule restrict_module(const HopfInclusion& incl, const HModule& w);

// f : M -> N (dim N x dim M) intertwines every basis action.
bool is_module_map(const HModule& m, const HModule& n, const Matrix& f, std::string* witness = nullptr);
std::vector<Matrix> hom_space(const HModule& m, const HModule& n);

enum class IsoStatus { Isomorphic, NotIsomorphic, Undetermined };
struct IsoResult {
    IsoStatus status = IsoStatus::NotIsomorphic;
    std::optional<Matrix> map;
    std::string method;  // "basis", "prefix", "grid" or the reason for no map
};
// Searches Hom(M, N) for an invertible element: basis elements, prefix sums,
// then integer coefficient vectors in [-bound, bound] in lexicographic order.
IsoResult is_isomorphic(const HModule& m, const HModule& n, int bound = 3);

// H8 simples: V1(b) with z -> b, x, y -> b^2 (b a 4th root of unity, given
// as the power of zeta_4), and V2.
HModule h8_v1(const HopfPtr& h8, int b_power);
HModule h8_v2(const HopfPtr& h8);
// k_{ex,ey} over kK.
HModule klein_character(const HopfPtr& kk, int ex, int ey);
// All characters of a commutative group algebra, trivial first; empty when the
// basis is not a commutative group of grouplikes.
std::vector<HModule> group_characters(const HopfPtr& h);

}  // namespace hopfrob
