#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracles {

namespace {

std::int64_t code_of(const Vec& moduli, const Vec& x) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) c = c * moduli[i] + x[i];
    return c;
}

Vec decode(const Vec& moduli, std::int64_t c) {
    Vec x(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
        x[i] = c % moduli[i];
        c /= moduli[i];
    }
    return x;
}

Vec add(const Vec& moduli, const Vec& a, const Vec& b) {
    Vec out(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        out[i] = a[i] + b[i];
        if (out[i] >= moduli[i]) out[i] -= moduli[i];
    }
    return out;
}

}  // namespace

std::vector<Vec> span_of(const Vec& moduli, const std::vector<Vec>& gens) {
    std::set<Vec> seen;
    std::vector<Vec> frontier;
    Vec zero(moduli.size(), 0);
    seen.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        Vec cur = std::move(frontier.back());
        frontier.pop_back();
        for (const Vec& g : gens) {
            Vec nxt = add(moduli, cur, g);
            if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

std::set<std::vector<Vec>> all_subgroups(const Vec& moduli) {
    std::int64_t ambient = 1;
    for (std::int64_t m : moduli) ambient *= m;
    std::vector<Vec> all_elems;
    for (std::int64_t c = 0; c < ambient; ++c) all_elems.push_back(decode(moduli, c));

    std::set<std::vector<Vec>> found;
    std::vector<std::vector<Vec>> frontier;
    std::vector<Vec> zero_only{Vec(moduli.size(), 0)};
    found.insert(zero_only);
    frontier.push_back(zero_only);
    while (!frontier.empty()) {
        std::vector<Vec> sub = std::move(frontier.back());
        frontier.pop_back();
        for (const Vec& g : all_elems) {
            std::vector<Vec> gens = sub;
            gens.push_back(g);
            std::vector<Vec> bigger = span_of(moduli, gens);
            if (found.insert(bigger).second) frontier.push_back(bigger);
        }
    }
    return found;
}

Vec quotient_invariant_factors(const Vec& moduli, const std::vector<Vec>& relations) {
    std::int64_t ambient = 1;
    for (std::int64_t m : moduli) ambient *= m;
    std::vector<Vec> sub = span_of(moduli, relations);
    std::set<Vec> sub_set(sub.begin(), sub.end());

    // Coset of x = min code over x + H.
    std::map<std::int64_t, std::int64_t> order_histogram;
    std::set<std::int64_t> reps_seen;
    for (std::int64_t c = 0; c < ambient; ++c) {
        Vec x = decode(moduli, c);
        std::int64_t rep = ambient;
        for (const Vec& h : sub) rep = std::min(rep, code_of(moduli, add(moduli, x, h)));
        if (!reps_seen.insert(rep).second) continue;
        Vec acc(moduli.size(), 0);
        std::int64_t ord = 0;
        do {
            acc = add(moduli, acc, x);
            ++ord;
        } while (sub_set.find(acc) == sub_set.end());
        ++order_histogram[ord];
    }
    const std::int64_t qorder = static_cast<std::int64_t>(reps_seen.size());

    // The order histogram pins down a finite abelian group; search the
    // divisor chains with the right product for the matching one.
    std::vector<Vec> chains;
    std::function<void(std::int64_t, std::int64_t, Vec&)> build = [&](std::int64_t remaining,
                                                                      std::int64_t max_factor,
                                                                      Vec& chain) {
        if (remaining == 1) {
            chains.push_back(chain);
            return;
        }
        for (std::int64_t d = 2; d <= std::min(remaining, max_factor); ++d) {
            if (remaining % d != 0) continue;
            if (!chain.empty() && chain.back() % d != 0) continue;
            chain.push_back(d);
            build(remaining / d, d, chain);
            chain.pop_back();
        }
    };
    Vec chain;
    if (qorder == 1) return {};
    build(qorder, qorder, chain);

    for (const Vec& cand : chains) {
        std::map<std::int64_t, std::int64_t> hist;
        std::int64_t n = 1;
        for (std::int64_t f : cand) n *= f;
        for (std::int64_t c = 0; c < n; ++c) {
            Vec x = decode(cand, c);
            std::int64_t ord = 1;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                std::int64_t g = std::gcd(cand[i], x[i]);
                ord = std::lcm(ord, cand[i] / g);
            }
            ++hist[ord];
        }
        if (hist == order_histogram) return cand;
    }
    throw std::logic_error("no abelian group matches the coset order histogram");
}

std::int64_t centralizer_order(const std::vector<slab::Perm>& gens, std::size_t degree) {
    std::int64_t count = 0;
    const std::int64_t total = slab::factorial(degree);
    for (std::int64_t i = 0; i < total; ++i) {
        slab::Perm p = slab::perm_at(degree, i);
        bool ok = true;
        for (const slab::Perm& g : gens) {
            if (!slab::commutes(p, g)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

namespace {

using slab::Perm;

bool p_power_order(const Perm& p, std::int64_t prime) {
    for (const auto& cyc : slab::cycles_of(p)) {
        std::size_t len = cyc.size();
        while (len % static_cast<std::size_t>(prime) == 0) len /= static_cast<std::size_t>(prime);
        if (len != 1) return false;
    }
    return true;
}

bool tuple_transitive(const std::vector<Perm>& tuple, std::size_t n) {
    return slab::orbits(tuple, n).size() == 1;
}

std::vector<Perm> sym_generators(std::size_t n) {
    std::vector<Perm> gens;
    if (n >= 2) {
        Perm t = slab::identity_perm(n);
        std::swap(t[0], t[1]);
        gens.push_back(t);
        Perm c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::int32_t>((i + 1) % n);
        gens.push_back(c);
    }
    return gens;
}

std::vector<Perm> conj_tuple(const std::vector<Perm>& tuple, const Perm& g) {
    Perm gi = slab::inverse(g);
    std::vector<Perm> out;
    out.reserve(tuple.size());
    for (const Perm& t : tuple) out.push_back(slab::compose(g, slab::compose(t, gi)));
    return out;
}

std::int64_t orbit_count(std::set<std::vector<Perm>> valid, const std::vector<Perm>& conj_gens) {
    std::int64_t orbits = 0;
    while (!valid.empty()) {
        ++orbits;
        std::vector<std::vector<Perm>> frontier{*valid.begin()};
        valid.erase(valid.begin());
        while (!frontier.empty()) {
            std::vector<Perm> cur = std::move(frontier.back());
            frontier.pop_back();
            for (const Perm& g : conj_gens) {
                std::vector<Perm> img = conj_tuple(cur, g);
                auto it = valid.find(img);
                if (it != valid.end()) {
                    valid.erase(it);
                    frontier.push_back(std::move(img));
                }
            }
        }
    }
    return orbits;
}

// Partitions of n, parts listed non-increasing, optionally restricted to
// p-power parts.
void partitions(std::size_t n, std::size_t max_part, std::optional<std::int64_t> p,
                std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t part = std::min(n, max_part); part >= 1; --part) {
        if (p) {
            std::size_t q = part;
            while (q % static_cast<std::size_t>(*p) == 0) q /= static_cast<std::size_t>(*p);
            if (q != 1) continue;
        }
        cur.push_back(part);
        partitions(n - part, part, p, cur, out);
        cur.pop_back();
    }
}

Perm canonical_of_type(const std::vector<std::size_t>& parts, std::size_t n) {
    Perm p(n);
    std::size_t start = 0;
    for (std::size_t len : parts) {
        for (std::size_t i = 0; i < len; ++i) {
            p[start + i] = static_cast<std::int32_t>(start + (i + 1) % len);
        }
        start += len;
    }
    return p;
}

// Centralizer generators built directly from the cycle structure.
std::vector<Perm> local_centralizer_gens(const Perm& p) {
    auto cycles = slab::cycles_of(p);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<Perm> gens;
    for (const auto& cyc : cycles) {
        if (cyc.size() == 1) continue;
        Perm g = slab::identity_perm(p.size());
        for (std::size_t i = 0; i < cyc.size(); ++i)
            g[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
        gens.push_back(std::move(g));
    }
    for (std::size_t c = 0; c + 1 < cycles.size(); ++c) {
        if (cycles[c].size() != cycles[c + 1].size()) continue;
        Perm g = slab::identity_perm(p.size());
        for (std::size_t i = 0; i < cycles[c].size(); ++i) {
            g[static_cast<std::size_t>(cycles[c][i])] = cycles[c + 1][i];
            g[static_cast<std::size_t>(cycles[c + 1][i])] = cycles[c][i];
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace

std::int64_t tuple_class_count(std::size_t n, std::size_t h, std::optional<std::int64_t> p,
                               bool transitive_only) {
    const std::int64_t nf = slab::factorial(n);
    double full_cost = 1;
    for (std::size_t i = 0; i < h; ++i) full_cost *= static_cast<double>(nf);

    if (full_cost <= 2e6) {
        // Materialize every valid tuple, then close under conjugation.
        std::set<std::vector<Perm>> valid;
        std::vector<Perm> tuple(h);
        std::function<void(std::size_t)> rec = [&](std::size_t slot) {
            if (slot == h) {
                if (transitive_only && !tuple_transitive(tuple, n)) return;
                valid.insert(tuple);
                return;
            }
            for (std::int64_t i = 0; i < nf; ++i) {
                Perm cand = slab::perm_at(n, i);
                if (p && !p_power_order(cand, *p)) continue;
                bool ok = true;
                for (std::size_t s = 0; s < slot; ++s) {
                    if (!slab::commutes(tuple[s], cand)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                tuple[slot] = std::move(cand);
                rec(slot + 1);
            }
        };
        rec(0);
        return orbit_count(std::move(valid), sym_generators(n));
    }

    if (h != 2) throw std::invalid_argument("class-grouped strategy only implemented for pairs");

    // Pairs grouped by the conjugacy class of the first entry: classes of
    // pairs = sum over cycle types of C(rep)-orbits on the valid partners.
    std::vector<std::vector<std::size_t>> types;
    std::vector<std::size_t> cur;
    partitions(n, n, p, cur, types);
    std::int64_t total = 0;
    for (const auto& type : types) {
        Perm rep = canonical_of_type(type, n);
        std::set<std::vector<Perm>> valid;
        for (std::int64_t i = 0; i < nf; ++i) {
            Perm cand = slab::perm_at(n, i);
            if (!slab::commutes(rep, cand)) continue;
            if (p && !p_power_order(cand, *p)) continue;
            if (transitive_only && !tuple_transitive({rep, cand}, n)) continue;
            valid.insert({std::move(cand)});
        }
        total += orbit_count(std::move(valid), local_centralizer_gens(rep));
    }
    return total;
}

}  // namespace oracles
