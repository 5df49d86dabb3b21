#pragma once

#include <cstdint>
#include <vector>

namespace slab {

/// Permutation of {0, ..., n-1} stored as the image table: p[i] is where i
/// goes. Composition is right-to-left: compose(a, b) applies b first.
using Perm = std::vector<std::int32_t>;

Perm identity_perm(std::size_t n);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool commutes(const Perm& a, const Perm& b);

/// Orbits of the group generated by the given permutations, each orbit
/// sorted, orbits ordered by smallest member.
std::vector<std::vector<std::int32_t>> orbits(const std::vector<Perm>& generators, std::size_t n);

/// Generating set for the centralizer of p in the full symmetric group:
/// one rotation per cycle plus one swap per pair of adjacent same-length
/// cycles.
std::vector<Perm> centralizer_generators(const Perm& p);

std::vector<std::vector<std::int32_t>> cycles_of(const Perm& p);

/// Rank/unrank of permutations in lexicographic order (for exhaustive scans).
std::int64_t factorial(std::size_t n);
Perm perm_at(std::size_t n, std::int64_t index);

}  // namespace slab
