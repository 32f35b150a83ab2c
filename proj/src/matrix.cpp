#include "zclass/matrix.hpp"

namespace zclass {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {
    if (rows == 0 || cols == 0) throw dimension_error("matrix dimensions must be positive");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> data) {
    rows_ = data.size();
    if (rows_ == 0) throw dimension_error("matrix dimensions must be positive");
    cols_ = data.begin()->size();
    if (cols_ == 0) throw dimension_error("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : data) {
        if (r.size() != cols_) throw dimension_error("ragged initializer rows");
        for (const auto& v : r) entries_.push_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::zeros(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

RatMatrix RatMatrix::column(const std::vector<Rat>& entries) {
    RatMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

Rat& RatMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw dimension_error("matrix index out of range");
    return entries_[i * cols_ + j];
}

const Rat& RatMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw dimension_error("matrix index out of range");
    return entries_[i * cols_ + j];
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw dimension_error("matrix addition shape mismatch");
    RatMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + other.entries_[k];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw dimension_error("matrix subtraction shape mismatch");
    RatMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - other.entries_[k];
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw dimension_error("matrix product shape mismatch");
    RatMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = (*this)(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) m(i, j) += aik * other(k, j);
        }
    return m;
}

RatMatrix RatMatrix::operator-() const { return scaled(Rat(-1)); }

RatMatrix RatMatrix::scaled(const Rat& factor) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] * factor;
    return m;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != other.entries_[k]) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const Rat& v : entries_)
        if (sgn(v) != 0) return false;
    return true;
}

bool RatMatrix::is_nonnegative() const {
    for (const Rat& v : entries_)
        if (sgn(v) < 0) return false;
    return true;
}

bool RatMatrix::is_nonpositive() const {
    for (const Rat& v : entries_)
        if (sgn(v) > 0) return false;
    return true;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
    std::vector<Rat> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

std::vector<Rat> RatMatrix::col(std::size_t j) const {
    std::vector<Rat> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<Rat> RatMatrix::mul_vector(const std::vector<Rat>& x) const {
    if (x.size() != cols_) throw dimension_error("matrix-vector shape mismatch");
    std::vector<Rat> y(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    if (row_idx.empty() || col_idx.empty()) throw dimension_error("empty submatrix selection");
    RatMatrix m(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] >= rows_) throw dimension_error("row index out of range");
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (col_idx[j] >= cols_) throw dimension_error("column index out of range");
            m(i, j) = (*this)(row_idx[i], col_idx[j]);
        }
    }
    return m;
}

}  // namespace zclass
