#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slab/abelian_group.hpp"
#include "slab/int_matrix.hpp"
#include "slab/perm.hpp"
#include "slab/subgroup.hpp"

namespace slab {

/// The type of an orbit of a commuting-tuple action: a surjection
/// t: Z^h + A ->> A_t whose kernel meets A trivially. The kernel, as a
/// canonical full-rank lattice in Z^{h + rank(A)}, is the complete identity
/// of the type; quotient and surjection matrix are derived from it.
struct TypeClass {
    FiniteAbelianGroup base;
    std::size_t h = 0;
    Lattice kernel;
    FiniteAbelianGroup quotient;
    /// (h + rank(base)) x rank(quotient): images of the standard basis
    /// vectors of Z^h + A in quotient coordinates.
    IntMatrix surjection;

    /// |A_t| / |A|, the number of A-orbits inside one orbit of this type.
    std::int64_t index() const { return quotient.order() / base.order(); }

    bool operator==(const TypeClass& other) const {
        return base == other.base && h == other.h && kernel == other.kernel;
    }
    bool operator<(const TypeClass& other) const;
};

/// Build the type with the given kernel; nullopt when the kernel meets A
/// nontrivially (i.e. A would not act freely).
std::optional<TypeClass> type_from_kernel(const FiniteAbelianGroup& a, std::size_t h,
                                          const Lattice& kernel);

/// All types t for (A, h) with index |A_t|/|A| equal to `index`, canonically
/// ordered. With `p_power_only` set, keep only types whose quotient has
/// p-power order for that prime (the continuous-from-Z_p^h condition; targets
/// are finite, so a map from Z^h lands in the p-typical world exactly when
/// every orbit quotient is a p-group).
std::vector<TypeClass> enumerate_types_of_index(const FiniteAbelianGroup& a, std::size_t h,
                                                std::int64_t index,
                                                std::optional<std::int64_t> p_power_only = {});

/// All types with index between 1 and max_index.
std::vector<TypeClass> enumerate_types(const FiniteAbelianGroup& a, std::size_t h,
                                       std::int64_t max_index,
                                       std::optional<std::int64_t> p_power_only = {});

/// Conjugacy class of a map Z^h -> A wr Sigma_n: a multiset of types with
/// sum N_t * |A_t| = n * |A|, kept sorted for structural equality.
struct ActionClass {
    FiniteAbelianGroup base;
    std::size_t h = 0;
    std::int64_t n = 0;
    std::vector<std::pair<TypeClass, std::int64_t>> types;

    bool operator==(const ActionClass& other) const;
    std::string to_string() const;
};

std::vector<ActionClass> enumerate_action_classes(const FiniteAbelianGroup& a, std::size_t h,
                                                  std::int64_t n,
                                                  std::optional<std::int64_t> p_power_only = {});

/// Centralizer of the image, as a product of wreath pieces A_t wr Sigma_{N_t}.
struct CentralizerShape {
    std::vector<std::pair<FiniteAbelianGroup, std::int64_t>> factors;
    Int order() const;
};

CentralizerShape centralizer_shape(const ActionClass& c);

/// One distinct type only.
bool is_monotypical(const ActionClass& c);

/// True iff the class does not factor through any A wr (Sigma_m x Sigma_{n-m})
/// with 0 < m < n; equivalently monotypical with a single orbit.
bool survives_transfer(const ActionClass& c);

/// Explicit realization on n*|A| points: h commuting generator permutations
/// plus the permutations of the base-group generators (the free diagonal
/// A-action the classification is taken relative to). Orbit blocks are
/// consecutive.
struct PermutationAction {
    std::int64_t degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> base_generators;
};

PermutationAction to_permutations(const ActionClass& c);

/// Inverse of to_permutations up to class equality: recover the type multiset
/// of an explicit commuting action (used for round-trips and as an oracle).
ActionClass classify_action(const FiniteAbelianGroup& a, std::size_t h,
                            const PermutationAction& action);

/// Number of conjugacy classes of commuting h-tuples in Sigma_n by direct
/// enumeration, optionally restricted to tuples of p-power order. Guarded by
/// an explicit bound (n <= 6, h <= 2).
std::int64_t brute_force_class_count(std::size_t h, std::size_t n,
                                     std::optional<std::int64_t> p_power_only = {});

}  // namespace slab
