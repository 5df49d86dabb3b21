#include "slab/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace slab {

namespace {

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
bool locate_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < s.rows(); ++i) {
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs_int(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

bool row_col_clear(const IntMatrix& s, std::size_t t) {
    for (std::size_t i = t + 1; i < s.rows(); ++i)
        if (s(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < s.cols(); ++j)
        if (s(t, j) != 0) return false;
    return true;
}

}  // namespace

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    const std::size_t n = std::min(s.rows(), s.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(s(i, i));
    return d;
}

std::vector<Int> SmithDecomposition::nontrivial_factors() const {
    std::vector<Int> out;
    for (const Int& d : diagonal())
        if (d > 1) out.push_back(d);
    return out;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const Int& d : diagonal())
        if (d != 0) ++r;
    return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SmithDecomposition out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& s = out.s;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;
    const std::size_t nmin = std::min(s.rows(), s.cols());

    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pi = t, pj = t;
        if (!locate_pivot(s, t, pi, pj)) break;  // trailing block is zero
        for (;;) {
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int q = floor_div(s(i, t), s(t, t));
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int q = floor_div(s(t, j), s(t, t));
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
            }
            if (!row_col_clear(s, t)) {
                locate_pivot(s, t, pi, pj);
                continue;
            }

            // Divisibility: every entry of the trailing block must be a
            // multiple of the pivot; otherwise fold the offending row in.
            bool divides = true;
            for (std::size_t i = t + 1; i < s.rows() && divides; ++i) {
                for (std::size_t j = t + 1; j < s.cols(); ++j) {
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
            locate_pivot(s, t, pi, pj);
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return out;
}

std::int64_t AbelianStructure::order() const {
    if (free_rank != 0) throw std::logic_error("order of an infinite group");
    std::int64_t o = 1;
    for (std::int64_t d : invariant_factors) o *= d;
    return o;
}

AbelianStructure cokernel(const IntMatrix& relations) {
    SmithDecomposition snf = smith_normal_form(relations);
    AbelianStructure out;
    out.free_rank = relations.cols() - snf.rank();
    std::vector<Int> torsion = snf.nontrivial_factors();
    // SNF lists factors with d_i | d_{i+1}; invariant factors are kept
    // non-increasing (largest = exponent first).
    for (auto it = torsion.rbegin(); it != torsion.rend(); ++it) {
        out.invariant_factors.push_back(static_cast<std::int64_t>(*it));
    }
    return out;
}

}  // namespace slab
