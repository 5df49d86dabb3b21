#include "slab/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace slab {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged row list");
        std::size_t j = 0;
        for (std::int64_t v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::from_row_vectors(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged row list");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Int> IntMatrix::multiply_row(const std::vector<Int>& v) const {
    if (v.size() != rows_) throw std::invalid_argument("dimension mismatch in row-vector product");
    std::vector<Int> out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] += v[i] * (*this)(i, j);
    }
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss: division is exact at every step.
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) os << ", ";
            os << (*this)(i, j);
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

}  // namespace slab
