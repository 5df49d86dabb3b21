#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slab/smith.hpp"

namespace slab {

/// Finite abelian group in invariant-factor form: Z/d_1 x ... x Z/d_r with
/// d_1 >= d_2 >= ... >= 2 and d_{i+1} | d_i. Elements are coordinate vectors
/// (x_1, ..., x_r) with 0 <= x_i < d_i. The trivial group has r = 0.
class FiniteAbelianGroup {
  public:
    using Element = std::vector<std::int64_t>;

    FiniteAbelianGroup() = default;  // trivial group
    explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);
    explicit FiniteAbelianGroup(const AbelianStructure& s);

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }
    static FiniteAbelianGroup cyclic(std::int64_t m);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::int64_t order() const { return order_; }
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.front(); }
    bool is_trivial() const { return factors_.empty(); }

    /// Set when every invariant factor is a power of one prime.
    std::optional<std::int64_t> prime() const { return prime_; }

    bool operator==(const FiniteAbelianGroup& other) const { return factors_ == other.factors_; }
    bool operator!=(const FiniteAbelianGroup& other) const { return !(*this == other); }

    Element zero() const { return Element(factors_.size(), 0); }
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(std::int64_t k, const Element& a) const;
    std::int64_t element_order(const Element& a) const;

    /// Mixed-radix enumeration of all elements; index in [0, order).
    Element element_at(std::int64_t index) const;
    std::int64_t index_of(const Element& a) const;

    AbelianStructure structure() const { return {factors_, 0}; }

    std::string to_string() const;  // e.g. "Z/4+Z/2", "0" for trivial

  private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
    std::optional<std::int64_t> prime_;
};

}  // namespace slab
