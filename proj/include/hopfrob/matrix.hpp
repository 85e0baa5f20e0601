#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfrob/cyclotomic.hpp"

namespace hopfrob {

// Sparse vector: strictly increasing indices, no stored zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec unit_vec(int i, const Scalar& c = Scalar(1));
SparseVec from_dense(const std::vector<Scalar>& d);
std::vector<Scalar> to_dense(const SparseVec& v, int n);
Scalar coeff(const SparseVec& v, int i);
// y += a * x
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Scalar& a);
SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);
Scalar dot(const SparseVec& a, const std::vector<Scalar>& dense);
std::string to_string(const SparseVec& v);

// Dense scratch accumulator that emits a SparseVec.
class Accumulator {
public:
    explicit Accumulator(int n = 0) { resize(n); }
    void resize(int n);
    int size() const { return static_cast<int>(vals_.size()); }
    void add(int i, const Scalar& c);
    void add(const Scalar& a, const SparseVec& x);
    SparseVec take();

private:
    std::vector<Scalar> vals_;
    std::vector<char> used_;
    std::vector<int> touched_;
};

// Sparse row-major matrix.  A linear map V -> W is stored as dim W x dim V.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix from_dense(const std::vector<std::vector<Scalar>>& d);
    static Matrix from_columns(int rows, const std::vector<SparseVec>& cols);
    static Matrix column(const SparseVec& v, int rows);
    static Matrix row_vector(const SparseVec& v, int cols);
    static Matrix scalar(const Scalar& s);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVec& row(int i) const { return data_[i]; }
    void set_row(int i, SparseVec r) { data_[i] = std::move(r); }
    Scalar at(int i, int j) const { return coeff(data_[i], j); }
    void set(int i, int j, const Scalar& v);
    void add_to(int i, int j, const Scalar& v);
    std::size_t nnz() const;

    // Column j as a sparse vector over the rows.
    SparseVec col(int j) const;
    std::vector<SparseVec> columns() const;
    SparseVec apply(const SparseVec& x) const;

    Matrix transpose() const;
    Matrix scaled(const Scalar& s) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;
    // s if this == s * identity.
    std::optional<Scalar> scalar_multiple_of_identity() const;
    // s if this == s * o for a single s (o nonzero).
    std::optional<Scalar> proportional_to(const Matrix& o) const;
    // First (row, col) where the two matrices differ.
    std::optional<std::pair<int, int>> first_difference(const Matrix& o) const;

    std::vector<std::vector<Scalar>> dense() const;
    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> data_;
};

// Row-major Kronecker product: row i_A * rows_B + i_B, col j_A * cols_B + j_B.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);
// (V (x) W) -> (W (x) V) swap of tensor legs.
Matrix swap_matrix(int dv, int dw);

}  // namespace hopfrob
