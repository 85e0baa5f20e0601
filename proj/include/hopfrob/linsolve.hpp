#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hopfrob/matrix.hpp"

namespace hopfrob {

// Incrementally maintained reduced row echelon basis of a subspace of K^n.
// Every stored row has a leading 1 at its pivot and zeros at all other pivots.
class Echelon {
public:
    explicit Echelon(int n = 0) : n_(n), pivot_row_(n, -1) {}

    int ambient() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool full() const { return rank() == n_; }

    // Remainder of v modulo the span (zero iff v lies in the span).
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    // Adds v; returns true iff v was independent of the current span.
    bool add(const SparseVec& v);

    const std::vector<int>& pivots() const { return pivots_; }
    // Reduced rows ordered by pivot.
    std::vector<SparseVec> basis() const;
    bool same_span(const Echelon& o) const;

private:
    void insert_reduced(SparseVec r);

    int n_;
    std::vector<int> pivot_row_;  // column -> index into rows_ or -1
    std::vector<int> pivots_;     // insertion order
    std::vector<SparseVec> rows_;
};

struct SolveResult {
    bool consistent = false;
    SparseVec particular;
    std::vector<SparseVec> null_basis;
};

// Exact solution set of A x = b.  Pivoting is first-nonzero in column order, so
// the output is deterministic: free variables of the particular solution are 0
// and each null vector is scaled so its first nonzero coordinate is 1.
SolveResult solve_linear(const Matrix& a, const SparseVec& b);

std::vector<SparseVec> null_space(const Matrix& a);
int rank(const Matrix& a);
// Fully reduced echelon form together with pivot columns.
std::pair<Matrix, std::vector<int>> rref(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
// Solves A X = B column by column; nullopt when some column is inconsistent.
std::optional<Matrix> solve_multi(const Matrix& a, const Matrix& b);

// Scales v so its first nonzero coordinate is 1.
SparseVec normalize_leading(const SparseVec& v);

}  // namespace hopfrob
