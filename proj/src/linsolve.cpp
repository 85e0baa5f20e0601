#include "hopfrob/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfrob {

SparseVec normalize_leading(const SparseVec& v) {
    if (v.empty() || v.front().second.is_one()) return v;
    return scaled(v, v.front().second.inverse());
}

SparseVec Echelon::reduce(const SparseVec& v) const {
    SparseVec r = v;
    for (const auto& [i, c] : v) {
        if (i >= n_) throw std::out_of_range("vector longer than echelon ambient space");
        int pr = pivot_row_[i];
        if (pr >= 0) axpy(r, -c, rows_[pr]);
    }
    return r;
}

void Echelon::insert_reduced(SparseVec r) {
    r = normalize_leading(r);
    int q = r.front().first;
    for (auto& row : rows_) {
        Scalar c = coeff(row, q);
        if (!c.is_zero()) axpy(row, -c, r);
    }
    pivot_row_[q] = static_cast<int>(rows_.size());
    pivots_.push_back(q);
    rows_.push_back(std::move(r));
}

bool Echelon::add(const SparseVec& v) {
    if (full()) return false;
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    insert_reduced(std::move(r));
    return true;
}

std::vector<SparseVec> Echelon::basis() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (int c = 0; c < n_; ++c)
        if (pivot_row_[c] >= 0) out.push_back(rows_[pivot_row_[c]]);
    return out;
}

bool Echelon::same_span(const Echelon& o) const {
    if (n_ != o.n_ || rank() != o.rank()) return false;
    for (const auto& r : rows_)
        if (!o.contains(r)) return false;
    return true;
}

SolveResult solve_linear(const Matrix& a, const SparseVec& b) {
    const int n = a.cols();
    Echelon ech(n + 1);
    std::vector<SparseVec> bcols(a.rows());
    for (const auto& [i, c] : b) {
        if (i >= a.rows()) throw std::invalid_argument("right-hand side longer than matrix");
        bcols[i].emplace_back(n, c);
    }
    for (int i = 0; i < a.rows(); ++i) {
        SparseVec row = a.row(i);
        for (auto& e : bcols[i]) row.push_back(e);
        ech.add(row);
    }
    SolveResult res;
    std::vector<int> pivot_of_col(n + 1, -1);
    auto rows = ech.basis();
    for (int k = 0; k < static_cast<int>(rows.size()); ++k) pivot_of_col[rows[k].front().first] = k;
    if (pivot_of_col[n] >= 0) return res;
    res.consistent = true;
    for (const auto& row : rows) {
        Scalar rhs = coeff(row, n);
        if (!rhs.is_zero()) res.particular.emplace_back(row.front().first, rhs);
    }
    std::vector<int> free_cols;
    std::vector<int> free_index(n, -1);
    for (int c = 0; c < n; ++c)
        if (pivot_of_col[c] < 0) {
            free_index[c] = static_cast<int>(free_cols.size());
            free_cols.push_back(c);
        }
    std::vector<SparseVec> nulls(free_cols.size());
    for (const auto& row : rows) {
        int p = row.front().first;
        for (const auto& [j, c] : row) {
            if (j == p || j >= n) continue;
            nulls[free_index[j]].emplace_back(p, -c);
        }
    }
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        auto& v = nulls[k];
        v.emplace_back(free_cols[k], Scalar(1));
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        res.null_basis.push_back(normalize_leading(v));
    }
    return res;
}

std::vector<SparseVec> null_space(const Matrix& a) { return solve_linear(a, {}).null_basis; }

int rank(const Matrix& a) {
    Echelon ech(a.cols());
    for (int i = 0; i < a.rows() && !ech.full(); ++i) ech.add(a.row(i));
    return ech.rank();
}

std::pair<Matrix, std::vector<int>> rref(const Matrix& a) {
    Echelon ech(a.cols());
    for (int i = 0; i < a.rows(); ++i) ech.add(a.row(i));
    auto rows = ech.basis();
    Matrix m(static_cast<int>(rows.size()), a.cols());
    std::vector<int> piv;
    for (int k = 0; k < static_cast<int>(rows.size()); ++k) {
        piv.push_back(rows[k].front().first);
        m.set_row(k, rows[k]);
    }
    return {m, piv};
}

std::optional<Matrix> solve_multi(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_multi shape mismatch");
    const int n = a.cols();
    const int m = b.cols();
    Echelon ech(n + m);
    for (int i = 0; i < a.rows(); ++i) {
        SparseVec row = a.row(i);
        for (const auto& [j, c] : b.row(i)) row.emplace_back(n + j, c);
        ech.add(row);
    }
    Matrix x(n, m);
    for (const auto& row : ech.basis()) {
        int p = row.front().first;
        if (p >= n) return std::nullopt;
        SparseVec xr;
        for (const auto& [j, c] : row)
            if (j >= n) xr.emplace_back(j - n, c);
        x.set_row(p, std::move(xr));
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return solve_multi(a, Matrix::identity(a.rows()));
}

}  // namespace hopfrob
