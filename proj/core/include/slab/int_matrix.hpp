#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "slab/numeric.hpp"

namespace slab {

/// Dense matrix over the integers, row-major, arbitrary-precision entries.
/// Values are immutable in spirit: every operation returns a fresh matrix;
/// the mutating row/column helpers exist for the normal-form algorithms.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static IntMatrix from_row_vectors(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix transposed() const;

    bool is_zero() const;
    bool is_diagonal() const;

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> multiply_row(const std::vector<Int>& v) const;  // v * this

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    /// Exact determinant (square matrices), Bareiss fraction-free elimination.
    Int determinant() const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

}  // namespace slab
