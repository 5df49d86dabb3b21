#include "slab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace slab {

Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<std::int32_t>(i);
    return out;
}

bool commutes(const Perm& a, const Perm& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[static_cast<std::size_t>(b[i])] != b[static_cast<std::size_t>(a[i])]) return false;
    }
    return true;
}

std::vector<std::vector<std::int32_t>> orbits(const std::vector<Perm>& generators, std::size_t n) {
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::int32_t>> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::int32_t> orbit{static_cast<std::int32_t>(start)};
        seen[start] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const Perm& g : generators) {
                std::int32_t img = g[static_cast<std::size_t>(orbit[head])];
                if (!seen[static_cast<std::size_t>(img)]) {
                    seen[static_cast<std::size_t>(img)] = true;
                    orbit.push_back(img);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<std::vector<std::int32_t>> cycles_of(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<std::vector<std::int32_t>> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::int32_t> cyc;
        std::int32_t cur = static_cast<std::int32_t>(i);
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cyc.push_back(cur);
            cur = p[static_cast<std::size_t>(cur)];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<Perm> centralizer_generators(const Perm& p) {
    const std::size_t n = p.size();
    auto cycles = cycles_of(p);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<Perm> gens;
    for (const auto& cyc : cycles) {
        if (cyc.size() > 1) {
            Perm g = identity_perm(n);
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                g[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
            }
            gens.push_back(std::move(g));
        }
    }
    for (std::size_t c = 0; c + 1 < cycles.size(); ++c) {
        if (cycles[c].size() != cycles[c + 1].size()) continue;
        Perm g = identity_perm(n);
        for (std::size_t i = 0; i < cycles[c].size(); ++i) {
            g[static_cast<std::size_t>(cycles[c][i])] = cycles[c + 1][i];
            g[static_cast<std::size_t>(cycles[c + 1][i])] = cycles[c][i];
        }
        gens.push_back(std::move(g));
    }
    if (gens.empty()) gens.push_back(identity_perm(n));
    return gens;
}

std::int64_t factorial(std::size_t n) {
    std::int64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<std::int64_t>(i);
    return f;
}

Perm perm_at(std::size_t n, std::int64_t index) {
    if (index < 0 || index >= factorial(n)) throw std::out_of_range("permutation index");
    std::vector<std::int32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    Perm out;
    out.reserve(n);
    for (std::size_t i = n; i-- > 0;) {
        std::int64_t f = factorial(i);
        std::size_t pick = static_cast<std::size_t>(index / f);
        index %= f;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

}  // namespace slab
