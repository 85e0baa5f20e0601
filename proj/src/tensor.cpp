#include "hopfrob/tensor.hpp"

#include <stdexcept>

namespace hopfrob {

SparseTensor::SparseTensor(std::vector<int> shape, int split) : shape_(std::move(shape)), split_(split) {
    if (split_ < 0 || split_ > arity()) throw std::invalid_argument("tensor split outside arity");
    int lead = 1;
    for (int k = 0; k < split_; ++k) lead *= shape_[k];
    trail_ = 1;
    for (int k = split_; k < arity(); ++k) trail_ *= shape_[k];
    fibers_.assign(lead, {});
}

void SparseTensor::set_fiber(int lead, SparseVec v) {
    for (const auto& [i, c] : v)
        if (i < 0 || i >= trail_) throw std::out_of_range("tensor entry outside shape");
    fibers_.at(lead) = std::move(v);
}

int SparseTensor::flatten_lead(const std::vector<int>& index) const {
    int f = 0;
    for (int k = 0; k < split_; ++k) {
        if (index[k] < 0 || index[k] >= shape_[k]) throw std::out_of_range("tensor index outside shape");
        f = f * shape_[k] + index[k];
    }
    return f;
}

int SparseTensor::flatten_trail(const std::vector<int>& index) const {
    int f = 0;
    for (int k = split_; k < arity(); ++k) {
        if (index[k] < 0 || index[k] >= shape_[k]) throw std::out_of_range("tensor index outside shape");
        f = f * shape_[k] + index[k];
    }
    return f;
}

void SparseTensor::add(const std::vector<int>& index, const Scalar& c) {
    if (static_cast<int>(index.size()) != arity()) throw std::invalid_argument("tensor index arity mismatch");
    axpy(fibers_[flatten_lead(index)], Scalar(1), unit_vec(flatten_trail(index), c));
}

Scalar SparseTensor::at(const std::vector<int>& index) const {
    if (static_cast<int>(index.size()) != arity()) throw std::invalid_argument("tensor index arity mismatch");
    return coeff(fibers_[flatten_lead(index)], flatten_trail(index));
}

std::size_t SparseTensor::nnz() const {
    std::size_t n = 0;
    for (const auto& f : fibers_) n += f.size();
    return n;
}

Matrix SparseTensor::as_map() const { return Matrix::from_columns(trail_, fibers_); }

SparseTensor SparseTensor::from_map(const Matrix& m, std::vector<int> shape, int split) {
    SparseTensor t(std::move(shape), split);
    if (m.rows() != t.trail_ || m.cols() != t.lead_size()) throw std::invalid_argument("map shape differs from tensor shape");
    auto cols = m.columns();
    for (int j = 0; j < m.cols(); ++j) t.fibers_[j] = std::move(cols[j]);
    return t;
}

}  // namespace hopfrob
