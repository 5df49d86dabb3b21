#pragma once

#include <cstdint>
#include <vector>

#include "slab/int_matrix.hpp"

namespace slab {

/// Smith decomposition of an integer matrix M: u * M * v = s with u, v
/// unimodular and s diagonal, diagonal entries d_1 | d_2 | ... >= 0,
/// zeros trailing.
struct SmithDecomposition {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;

    std::vector<Int> diagonal() const;
    /// Diagonal entries > 1 (the invariant factors of the cokernel torsion).
    std::vector<Int> nontrivial_factors() const;
    std::size_t rank() const;  // number of nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Isomorphism type of a finitely generated abelian group: torsion invariant
/// factors (non-increasing, each divisible by the next) plus free rank.
struct AbelianStructure {
    std::vector<std::int64_t> invariant_factors;
    std::size_t free_rank = 0;

    bool operator==(const AbelianStructure& other) const = default;
    bool is_finite() const { return free_rank == 0; }
    std::int64_t order() const;  // only meaningful when finite
};

/// Cokernel of the relation matrix: Z^cols modulo the span of the rows.
AbelianStructure cokernel(const IntMatrix& relations);

}  // namespace slab
