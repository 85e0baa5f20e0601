#include "hopfrob/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfrob {

SparseVec unit_vec(int i, const Scalar& c) {
    if (c.is_zero()) return {};
    return {{i, c}};
}

SparseVec from_dense(const std::vector<Scalar>& d) {
    SparseVec v;
    for (int i = 0; i < static_cast<int>(d.size()); ++i)
        if (!d[i].is_zero()) v.emplace_back(i, d[i]);
    return v;
}

std::vector<Scalar> to_dense(const SparseVec& v, int n) {
    std::vector<Scalar> d(n);
    for (const auto& [i, c] : v) d.at(i) = c;
    return d;
}

Scalar coeff(const SparseVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, int k) { return e.first < k; });
    if (it != v.end() && it->first == i) return it->second;
    return Scalar(0);
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Scalar s = y[i].second + a * x[j].second;
            if (!s.is_zero()) out.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
    if (a.is_zero()) return {};
    SparseVec out;
    out.reserve(x.size());
    for (const auto& [i, c] : x) out.emplace_back(i, c * a);
    return out;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    axpy(r, Scalar(1), b);
    return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    axpy(r, Scalar(-1), b);
    return r;
}

Scalar dot(const SparseVec& a, const std::vector<Scalar>& dense) {
    Scalar s(0);
    for (const auto& [i, c] : a)
        if (!dense[i].is_zero()) s += c * dense[i];
    return s;
}

std::string to_string(const SparseVec& v) {
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += std::to_string(v[k].first) + ": " + v[k].second.str();
    }
    return out + "}";
}

void Accumulator::resize(int n) {
    vals_.assign(n, Scalar(0));
    used_.assign(n, 0);
    touched_.clear();
}

void Accumulator::add(int i, const Scalar& c) {
    if (c.is_zero()) return;
    if (!used_[i]) {
        used_[i] = 1;
        touched_.push_back(i);
        vals_[i] = c;
    } else {
        vals_[i] += c;
    }
}

void Accumulator::add(const Scalar& a, const SparseVec& x) {
    if (a.is_zero()) return;
    bool one = a.is_one();
    for (const auto& [i, c] : x) add(i, one ? c : a * c);
}

SparseVec Accumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    out.reserve(touched_.size());
    for (int i : touched_) {
        if (!vals_[i].is_zero()) out.emplace_back(i, std::move(vals_[i]));
        vals_[i] = Scalar(0);
        used_[i] = 0;
    }
    touched_.clear();
    return out;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i] = unit_vec(i);
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& d) {
    int r = static_cast<int>(d.size());
    int c = r ? static_cast<int>(d[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(d[i].size()) != c) throw std::invalid_argument("ragged dense matrix");
        m.data_[i] = hopfrob::from_dense(d[i]);
    }
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<SparseVec>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [i, c] : cols[j]) {
            if (i < 0 || i >= rows) throw std::out_of_range("column entry outside matrix");
            m.data_[i].emplace_back(j, c);
        }
    return m;
}

Matrix Matrix::column(const SparseVec& v, int rows) { return from_columns(rows, {v}); }

Matrix Matrix::row_vector(const SparseVec& v, int cols) {
    Matrix m(1, cols);
    m.data_[0] = v;
    return m;
}

Matrix Matrix::scalar(const Scalar& s) {
    Matrix m(1, 1);
    m.data_[0] = unit_vec(0, s);
    return m;
}

void Matrix::set(int i, int j, const Scalar& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int k) { return e.first < k; });
    if (it != r.end() && it->first == j) {
        if (v.is_zero())
            r.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        r.insert(it, {j, v});
    }
}

void Matrix::add_to(int i, int j, const Scalar& v) {
    if (v.is_zero()) return;
    set(i, j, at(i, j) + v);
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

SparseVec Matrix::col(int j) const {
    SparseVec v;
    for (int i = 0; i < rows_; ++i) {
        Scalar c = at(i, j);
        if (!c.is_zero()) v.emplace_back(i, c);
    }
    return v;
}

std::vector<SparseVec> Matrix::columns() const {
    std::vector<SparseVec> cs(cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, c] : data_[i]) cs[j].emplace_back(i, c);
    return cs;
}

SparseVec Matrix::apply(const SparseVec& x) const {
    std::vector<Scalar> d = to_dense(x, cols_);
    SparseVec out;
    for (int i = 0; i < rows_; ++i) {
        Scalar s = dot(data_[i], d);
        if (!s.is_zero()) out.emplace_back(i, std::move(s));
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, c] : data_[i]) t.data_[j].emplace_back(i, c);
    return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i) m.data_[i] = hopfrob::scaled(data_[i], s);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(rows_, o.cols_);
    Accumulator acc(o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (const auto& [k, c] : data_[i]) acc.add(c, o.data_[k]);
        m.data_[i] = acc.take();
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix m = *this;
    for (int i = 0; i < rows_; ++i) axpy(m.data_[i], Scalar(1), o.data_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix m = *this;
    for (int i = 0; i < rows_; ++i) axpy(m.data_[i], Scalar(-1), o.data_[i]);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        if (data_[i].size() != 1 || data_[i][0].first != i || !data_[i][0].second.is_one()) return false;
    return true;
}

std::optional<Scalar> Matrix::scalar_multiple_of_identity() const {
    if (rows_ != cols_) return std::nullopt;
    if (rows_ == 0) return Scalar(1);
    Scalar s = at(0, 0);
    for (int i = 0; i < rows_; ++i) {
        if (s.is_zero()) {
            if (!data_[i].empty()) return std::nullopt;
        } else if (data_[i].size() != 1 || data_[i][0].first != i || data_[i][0].second != s) {
            return std::nullopt;
        }
    }
    return s;
}

std::optional<Scalar> Matrix::proportional_to(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return std::nullopt;
    std::optional<Scalar> ratio;
    for (int i = 0; i < rows_ && !ratio; ++i)
        if (!o.data_[i].empty()) ratio = coeff(data_[i], o.data_[i][0].first) / o.data_[i][0].second;
    if (!ratio) return is_zero() ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
    if (o.scaled(*ratio) != *this) return std::nullopt;
    return ratio;
}

std::optional<std::pair<int, int>> Matrix::first_difference(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return std::make_pair(-1, -1);
    for (int i = 0; i < rows_; ++i) {
        if (data_[i] == o.data_[i]) continue;
        SparseVec d = data_[i] - o.data_[i];
        return std::make_pair(i, d.front().first);
    }
    return std::nullopt;
}

std::vector<std::vector<Scalar>> Matrix::dense() const {
    std::vector<std::vector<Scalar>> d(rows_);
    for (int i = 0; i < rows_; ++i) d[i] = to_dense(data_[i], cols_);
    return d;
}

std::string Matrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ib = 0; ib < b.rows(); ++ib) {
            SparseVec r;
            r.reserve(a.row(ia).size() * b.row(ib).size());
            for (const auto& [ja, ca] : a.row(ia))
                for (const auto& [jb, cb] : b.row(ib)) r.emplace_back(ja * b.cols() + jb, ca * cb);
            m.set_row(ia * b.rows() + ib, std::move(r));
        }
    return m;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    int rows = blocks[0].rows();
    int cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
        cols += b.cols();
    }
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        SparseVec r;
        int off = 0;
        for (const auto& b : blocks) {
            for (const auto& [j, c] : b.row(i)) r.emplace_back(j + off, c);
            off += b.cols();
        }
        m.set_row(i, std::move(r));
    }
    return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    int cols = blocks[0].cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
        rows += b.rows();
    }
    Matrix m(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i) m.set_row(off + i, b.row(i));
        off += b.rows();
    }
    return m;
}

Matrix swap_matrix(int dv, int dw) {
    Matrix m(dw * dv, dv * dw);
    for (int a = 0; a < dv; ++a)
        for (int b = 0; b < dw; ++b) m.set_row(b * dv + a, unit_vec(a * dw + b));
    return m;
}

}  // namespace hopfrob
