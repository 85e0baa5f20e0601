#pragma once

#include <vector>

#include "hopfrob/matrix.hpp"

namespace hopfrob {

// Sparse multilinear structure constants.  The first `split` indices are the
// inputs; each input multi-index owns a fiber holding the flattened
// row-major output coordinates.  Multiplication is shape {n,n,n} with
// split 2; comultiplication is shape {n,n,n} with split 1.
class SparseTensor {
public:
    SparseTensor() = default;
    SparseTensor(std::vector<int> shape, int split);

    int arity() const { return static_cast<int>(shape_.size()); }
    const std::vector<int>& shape() const { return shape_; }
    int split() const { return split_; }
    int lead_size() const { return static_cast<int>(fibers_.size()); }
    int trail_size() const { return trail_; }

    const SparseVec& fiber(int lead) const { return fibers_[lead]; }
    void set_fiber(int lead, SparseVec v);
    void add(const std::vector<int>& index, const Scalar& c);
    Scalar at(const std::vector<int>& index) const;
    std::size_t nnz() const;

    // trail_size x lead_size matrix of the map encoded by the tensor.
    Matrix as_map() const;
    static SparseTensor from_map(const Matrix& m, std::vector<int> shape, int split);

    bool operator==(const SparseTensor& o) const { return shape_ == o.shape_ && split_ == o.split_ && fibers_ == o.fibers_; }

    int flatten_lead(const std::vector<int>& index) const;
    int flatten_trail(const std::vector<int>& index) const;

private:
    std::vector<int> shape_;
    int split_ = 0;
    int trail_ = 1;
    std::vector<SparseVec> fibers_;
};

}  // namespace hopfrob
