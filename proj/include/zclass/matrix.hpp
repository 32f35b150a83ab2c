#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "zclass/rational.hpp"

namespace zclass {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> data);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zeros(std::size_t rows, std::size_t cols);
    static RatMatrix column(const std::vector<Rat>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j);
    const Rat& at(std::size_t i, std::size_t j) const;

    RatMatrix transpose() const;
    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator-() const;
    RatMatrix scaled(const Rat& factor) const;
    bool operator==(const RatMatrix& other) const;
    bool operator!=(const RatMatrix& other) const { return !(*this == other); }

    bool is_zero() const;
    bool is_nonnegative() const;
    bool is_nonpositive() const;

    std::vector<Rat> row(std::size_t i) const;
    std::vector<Rat> col(std::size_t j) const;
    std::vector<Rat> mul_vector(const std::vector<Rat>& x) const;

    // Rows and columns restricted to the given sorted index lists.
    RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

}  // namespace zclass
