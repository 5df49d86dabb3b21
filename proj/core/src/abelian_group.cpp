#include "slab/abelian_group.hpp"

#include <sstream>
#include <stdexcept>

#include "slab/numeric.hpp"

namespace slab {

namespace {

// The prime p when n is a power of a single prime, nullopt otherwise.
std::optional<std::int64_t> prime_base(std::int64_t n) {
    if (n < 2) return std::nullopt;
    std::int64_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    if (n != 1) return std::nullopt;
    return p;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw std::invalid_argument("invariant factor < 2");
        if (i > 0 && factors_[i - 1] % factors_[i] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
        order_ *= factors_[i];
    }
    if (!factors_.empty()) {
        auto p = prime_base(factors_.front());
        if (p) {
            bool all = true;
            for (std::int64_t d : factors_) {
                auto q = prime_base(d);
                if (!q || *q != *p) all = false;
            }
            if (all) prime_ = p;
        }
    }
}

FiniteAbelianGroup::FiniteAbelianGroup(const AbelianStructure& s) {
    if (!s.is_finite()) throw std::invalid_argument("structure has positive free rank");
    *this = FiniteAbelianGroup(s.invariant_factors);
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    if (m == 1) return trivial();
    return FiniteAbelianGroup({m});
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
    Element out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out[i] = a[i] + b[i];
        if (out[i] >= factors_[i]) out[i] -= factors_[i];
    }
    return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::neg(const Element& a) const {
    Element out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out[i] = a[i] == 0 ? 0 : factors_[i] - a[i];
    }
    return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::scale(std::int64_t k, const Element& a) const {
    Element out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out[i] = mod_norm(k % factors_[i] * a[i], factors_[i]);
    }
    return out;
}

std::int64_t FiniteAbelianGroup::element_order(const Element& a) const {
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        ord = lcm64(ord, factors_[i] / gcd64(factors_[i], a[i]));
    }
    return ord;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element_at(std::int64_t index) const {
    Element out(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        out[i] = index % factors_[i];
        index /= factors_[i];
    }
    return out;
}

std::int64_t FiniteAbelianGroup::index_of(const Element& a) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx = idx * factors_[i] + a[i];
    }
    return idx;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) os << "+";
        os << "Z/" << factors_[i];
    }
    return os.str();
}

}  // namespace slab
