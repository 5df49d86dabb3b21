#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace slab {

// All arithmetic in this library is exact. Matrices and symmetric-function
// tables use arbitrary-precision integers; class functions use exact
// rationals. Group orders and element coordinates stay at desk scale and fit
// in 64 bits.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Floor division (unlike C++ '/', which truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd64(a, b) * b;
}

/// Exact binomial coefficient over the integers.
Int binomial(std::int64_t n, std::int64_t k);

/// x mod m normalized into [0, m).
inline std::int64_t mod_norm(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n);

/// All primes <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int num = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        num *= n - k + i;
        num /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return num;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= bound; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

}  // namespace slab
