#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "slab/abelian_group.hpp"
#include "slab/int_matrix.hpp"
#include "slab/smith.hpp"

namespace slab {

/// Row Hermite echelon form of a generating set. Pivots are positive,
/// entries above a pivot are reduced into [0, pivot); zero rows are dropped.
/// The result is the unique canonical basis of the spanned lattice.
std::vector<std::vector<Int>> hermite_rows(std::vector<std::vector<Int>> rows, std::size_t dim);

/// Full-rank sublattice of Z^dim in canonical Hermite form. Two lattices are
/// equal iff their canonical bases coincide entrywise.
class Lattice {
  public:
    Lattice() = default;
    static Lattice from_rows(std::size_t dim, const std::vector<std::vector<Int>>& rows);
    static Lattice from_hnf(IntMatrix hnf);  // trusts the caller

    std::size_t dim() const { return static_cast<std::size_t>(hnf_.rows()); }
    const IntMatrix& basis() const { return hnf_; }

    /// Index in Z^dim = product of the diagonal.
    Int index() const;
    bool contains(const std::vector<Int>& v) const;

    bool operator==(const Lattice& other) const { return hnf_ == other.hnf_; }
    bool operator<(const Lattice& other) const;

  private:
    IntMatrix hnf_;
};

/// All full-rank sublattices of Z^dim with the given index that contain
/// m_i * e_i for every positive entry of `moduli` (entries of 0 mark free
/// coordinates with no containment constraint).
std::vector<Lattice> enumerate_lattices(std::size_t dim, std::int64_t index,
                                        const std::vector<std::int64_t>& moduli);

/// Subgroup of (Z/m_1) x ... x (Z/m_k), held as the full preimage lattice in
/// Z^k (which contains diag(m)). The canonical Hermite basis makes each
/// subgroup's representation unique: list equality is set equality.
///
/// This is also the working model for subgroups of torsion points of
/// (Q/Z)^k: a subgroup of exponent dividing m_i in coordinate i is realized
/// inside Z/m_1 x ... x Z/m_k once and for all, and can be re-realized at any
/// coarser exponent with rescale().
class Subgroup {
  public:
    using Element = std::vector<std::int64_t>;

    Subgroup() = default;

    static Subgroup generated_by(std::vector<std::int64_t> moduli,
                                 const std::vector<Element>& generators);
    static Subgroup from_lattice(std::vector<std::int64_t> moduli, Lattice lattice);
    static Subgroup trivial_subgroup(std::vector<std::int64_t> moduli);
    static Subgroup full(std::vector<std::int64_t> moduli);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    const Lattice& lattice() const { return lattice_; }
    std::int64_t ambient_order() const;
    std::int64_t order() const;
    std::int64_t exponent() const;

    bool contains(const Element& e) const;
    std::vector<Element> elements() const;

    /// Nonzero canonical-basis rows reduced modulo the ambient, i.e. a
    /// canonical generating set by actual ambient elements.
    std::vector<Element> element_generators() const;

    /// Isomorphism type of the subgroup itself.
    AbelianStructure structure() const;

    /// Image under dropping all coordinates outside [from, to).
    Subgroup project(std::size_t from, std::size_t to) const;

    /// Same subgroup of (Q/Z)^k torsion re-realized at coarser exponents
    /// (each current modulus must divide the new one).
    Subgroup rescale(const std::vector<std::int64_t>& new_moduli) const;

    /// Preimage of `target` under the homomorphism sending the i-th source
    /// generator to row i of `map` (coordinates in the target ambient).
    static Subgroup preimage(std::vector<std::int64_t> source_moduli, const IntMatrix& map,
                             const Subgroup& target);

    bool operator==(const Subgroup& other) const {
        return moduli_ == other.moduli_ && lattice_ == other.lattice_;
    }
    bool operator<(const Subgroup& other) const;

    std::string to_string() const;

  private:
    std::vector<std::int64_t> moduli_;  // all >= 1
    Lattice lattice_;
};

/// Complete duplicate-free list of subgroups of the given order, in canonical
/// form, ambient realized coordinatewise at the invariant factors of g.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, std::int64_t order);

/// Same, for an arbitrary coordinate ambient.
std::vector<Subgroup> enumerate_subgroups(const std::vector<std::int64_t>& moduli,
                                          std::int64_t order);

/// Image of the Pontryagin dual A* inside (Z/e)^h, e = exponent(A), for a
/// surjection f: Z^h -> A given by its h x rank(A) coordinate matrix (row i =
/// image of the i-th basis vector). Throws NotSurjective when f is not onto.
Subgroup dual_of_surjection(const FiniteAbelianGroup& a, const IntMatrix& f);

/// All subgroups H of Q/Z + (Q/Z)^h torsion with |H| = m whose projection to
/// the last h coordinates equals a_star; the ambient is realized at exponent
/// lcm(m, exp(a_star)) in every coordinate.
std::vector<Subgroup> subgroups_with_projection(std::int64_t m, std::size_t h,
                                                const Subgroup& a_star);

/// Pushout of Z^r -> A (rows of a_map are images in A-coordinates) and
/// Z^r -> Z^s (rows of g_map), i.e. (Z^s + A) / <(g(e_i), -a(e_i))>.
AbelianStructure pushout(const FiniteAbelianGroup& a, const IntMatrix& a_map,
                         const IntMatrix& g_map);

}  // namespace slab
