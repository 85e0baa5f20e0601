#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfrob/hopf.hpp"

namespace hopfrob {

// Completes a Hopf algebra whose multiplication table, unit (basis element 0)
// and labels are set: every non-unit basis element b is the word
// gens[words[b].first] * e_{words[b].second}, and Delta, S, epsilon are
// extended from the generator data multiplicatively (S anti-multiplicatively).
struct GeneratorData {
    int basis_index;
    SparseVec delta;  // in H (x) H
    SparseVec antipode;
    Scalar counit;
};
void complete_from_generators(FinHopf& h, const std::vector<GeneratorData>& gens,
                              const std::vector<std::pair<int, int>>& words);

// Multiplication table from left multiplication by generators.  left(g, b)
// returns gens[g] * e_b; words as in complete_from_generators.
SparseTensor mult_from_left_action(int dim, const std::vector<std::pair<int, int>>& words,
                                   const std::function<SparseVec(int, int)>& left);

// Group algebra of a Cayley table (table[g][h] = index of gh).  Throws on non-group tables.
HopfPtr group_algebra(const std::vector<std::vector<int>>& table, std::vector<std::string> labels = {},
                      std::string name = "kG");
HopfPtr cyclic_group_algebra(int n);
// Klein four group with basis {1, x, y, xy}.
HopfPtr klein_four();

// Kac-Paljutkin algebra, basis {1,x,y,z,xy,xz,yz,xyz}, conductor 4.
HopfPtr kac_paljutkin();
// kK -> H8 sending x, y to x, y.
HopfInclusion kac_paljutkin_inclusion();

// Taft algebra T_l(q), q = zeta_l^q_power, basis g^i x^j at index i*l + j.
HopfPtr taft(int l, int q_power = 1);
// k C_l -> T_l(q) on the grouplikes.
HopfInclusion taft_inclusion(int l, int q_power = 1);

// Small quantum group u_eps(sl2), eps = zeta_l, l odd >= 3; PBW basis
// f^j k^m e^i at index (j*l + m)*l + i.
HopfPtr small_quantum_sl2(int l);
int sl2_index(int l, int j, int m, int i);
// Hopf subalgebra spanned by the given basis elements (must be closed).
HopfInclusion sub_hopf(const HopfPtr& h, const std::vector<int>& subset, const std::string& name);
// u_eps(<K>, I+, I-) inside u_eps(sl2).
HopfInclusion sl2_subalgebra(const HopfPtr& u, int l, bool with_e, bool with_f);
HopfInclusion sl2_cartan(const HopfPtr& u, int l);
HopfInclusion sl2_borel_plus(const HopfPtr& u, int l);
HopfInclusion sl2_borel_minus(const HopfPtr& u, int l);

// Radford double H^{*cop} (x) H, basis (p, a) at index p*n + a, with H -> Drin(H).
HopfInclusion drinfeld_double(const HopfPtr& h);

// K = H with embed = id, and the unit inclusion k -> H.
HopfInclusion identity_inclusion(const HopfPtr& h);
HopfInclusion unit_inclusion(const HopfPtr& h);
HopfPtr ground_field();

}  // namespace hopfrob
