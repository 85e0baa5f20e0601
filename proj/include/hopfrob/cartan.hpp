#pragma once

#include <string>
#include <vector>

#include "hopfrob/report.hpp"

namespace hopfrob {

using IntMatrix = std::vector<std::vector<int>>;

// Finite-type Cartan datum.  J, I_plus, I_minus are bitmasks over the simple roots;
// sigma lists the exponents of the generators of the Cartan subgroup.
struct CartanDatum {
    char type = 'A';
    int rank = 1;
    IntMatrix C;
    int ell = 5;
    unsigned J = 0;
    unsigned I_plus = 0;
    unsigned I_minus = 0;
    std::vector<std::vector<int>> sigma;

    std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

// Cartan matrix with rows (2, -1, 0, ...) at the ends of A; B_n has a_{n-1,n} = -2,
// C_n is its transpose, G_2 = [[2,-1],[-3,2]].  Throws on unknown or out-of-range types.
IntMatrix cartan_matrix(char type, int rank);
CartanDatum cartan_datum(char type, int rank, int ell, unsigned J = 0);
// Diagonal 2, nonpositive off-diagonal, symmetric zero pattern, positive leading minors.
bool is_finite_type_cartan(const IntMatrix& c);

// K_i lies in the subgroup of (Z_ell)^rank generated by sigma for every i in I_+ or I_-.
bool sigma_contains_generators(const CartanDatum& d);

// Row sums of C_J (columns in J negated) reduced into [0, ell).
std::vector<int> row_sums_mod(const IntMatrix& c, unsigned J, int ell);

struct RowSumScan {
    std::string label;
    int ell = 0;
    std::vector<int> plain_row_sums;  // J = {} reduced mod ell
    bool plain_all_zero = false;
    std::vector<unsigned> zero_subsets;  // every J with all row sums of C_J zero mod ell
    bool any_all_zero() const { return plain_all_zero || !zero_subsets.empty(); }
};
// Row sums of C itself and of C_J over all 2^rank sign subsets J.
RowSumScan cartan_row_sum_check(const CartanDatum& datum);
Report cartan_row_sum_report(const std::vector<RowSumScan>& scans);

// The indecomposable types A1-A4, B2-B4, C3-C4, D4, G2.
std::vector<std::pair<char, int>> small_rank_types();

struct UnimodularityRow {
    bool e_in = false;  // I_+ = {1}
    bool f_in = false;  // I_- = {1}
    bool unimodular = false;
    bool predicted = false;  // I_+ = I_-; only asserted for ell > 3
    bool asserted = false;
    std::string label() const;
};
// Sigma = <K> and the four choices of (I_+, I_-) inside u_eps(sl2).
std::vector<UnimodularityRow> unimodularity_scan_sl2(int ell);

}  // namespace hopfrob
