#include "slab/subgroup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "slab/errors.hpp"
#include "slab/numeric.hpp"

namespace slab {

std::vector<std::vector<Int>> hermite_rows(std::vector<std::vector<Int>> rows, std::size_t dim) {
    for (const auto& r : rows) {
        if (r.size() != dim) throw std::invalid_argument("row dimension mismatch");
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs_int(rows[i][col]) < abs_int(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break;  // column is clear below r
            std::swap(rows[r], rows[best]);
            bool clear = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = floor_div(rows[i][col], rows[r][col]);
                for (std::size_t j = col; j < dim; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) clear = false;
            }
            if (clear) {
                if (rows[r][col] < 0) {
                    for (std::size_t j = col; j < dim; ++j) rows[r][j] = -rows[r][j];
                }
                for (std::size_t i = 0; i < r; ++i) {
                    Int q = floor_div(rows[i][col], rows[r][col]);
                    if (q == 0) continue;
                    for (std::size_t j = col; j < dim; ++j) rows[i][j] -= q * rows[r][j];
                }
                ++r;
                break;
            }
        }
    }
    rows.resize(r);
    return rows;
}

Lattice Lattice::from_rows(std::size_t dim, const std::vector<std::vector<Int>>& rows) {
    auto echelon = hermite_rows(rows, dim);
    if (echelon.size() != dim) throw std::invalid_argument("lattice generators are not full rank");
    Lattice out;
    out.hnf_ = IntMatrix::from_row_vectors(echelon, dim);
    return out;
}

Lattice Lattice::from_hnf(IntMatrix hnf) {
    Lattice out;
    out.hnf_ = std::move(hnf);
    return out;
}

Int Lattice::index() const {
    Int d = 1;
    for (std::size_t i = 0; i < dim(); ++i) d *= hnf_(i, i);
    return d;
}

bool Lattice::contains(const std::vector<Int>& v) const {
    if (v.size() != dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Int> w = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (w[i] % hnf_(i, i) != 0) return false;
        Int q = w[i] / hnf_(i, i);
        if (q == 0) continue;
        for (std::size_t j = i; j < dim(); ++j) w[j] -= q * hnf_(i, j);
    }
    return true;
}

bool Lattice::operator<(const Lattice& other) const {
    if (dim() != other.dim()) return dim() < other.dim();
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            if (hnf_(i, j) != other.hnf_(i, j)) return hnf_(i, j) < other.hnf_(i, j);
        }
    return false;
}

namespace {

void divisor_tuples(std::size_t pos, std::int64_t remaining, const std::vector<std::int64_t>& moduli,
                    std::vector<std::int64_t>& diag,
                    const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    if (pos == diag.size()) {
        if (remaining == 1) emit(diag);
        return;
    }
    for (std::int64_t a = 1; a <= remaining; ++a) {
        if (remaining % a != 0) continue;
        if (moduli[pos] > 0 && moduli[pos] % a != 0) continue;
        diag[pos] = a;
        divisor_tuples(pos + 1, remaining / a, moduli, diag, emit);
    }
}

}  // namespace

std::vector<Lattice> enumerate_lattices(std::size_t dim, std::int64_t index,
                                        const std::vector<std::int64_t>& moduli) {
    if (moduli.size() != dim) throw std::invalid_argument("moduli dimension mismatch");
    if (index < 1) throw std::invalid_argument("index must be positive");
    std::vector<Lattice> out;
    if (dim == 0) {
        if (index == 1) out.push_back(Lattice::from_hnf(IntMatrix(0, 0)));
        return out;
    }
    std::vector<std::int64_t> diag(dim);
    divisor_tuples(0, index, moduli, diag, [&](const std::vector<std::int64_t>& d) {
        IntMatrix h(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) h(i, i) = d[i];
        // DFS over the entries above each pivot, reduced mod the pivot.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t j = 1; j < dim; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (d[j] > 1) slots.emplace_back(i, j);
        std::function<void(std::size_t)> fill = [&](std::size_t s) {
            if (s == slots.size()) {
                Lattice cand = Lattice::from_hnf(h);
                for (std::size_t i = 0; i < dim; ++i) {
                    if (moduli[i] == 0) continue;
                    std::vector<Int> v(dim, 0);
                    v[i] = moduli[i];
                    if (!cand.contains(v)) return;
                }
                out.push_back(std::move(cand));
                return;
            }
            auto [i, j] = slots[s];
            for (std::int64_t t = 0; t < d[j]; ++t) {
                h(i, j) = t;
                fill(s + 1);
            }
            h(i, j) = 0;
        };
        fill(0);
    });
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup Subgroup::generated_by(std::vector<std::int64_t> moduli,
                                const std::vector<Element>& generators) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(generators.size() + moduli.size());
    for (const auto& g : generators) {
        if (g.size() != moduli.size()) throw std::invalid_argument("generator dimension mismatch");
        rows.emplace_back(g.begin(), g.end());
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 1) throw std::invalid_argument("ambient modulus must be >= 1");
        std::vector<Int> v(moduli.size(), 0);
        v[i] = moduli[i];
        rows.push_back(std::move(v));
    }
    Subgroup out;
    out.lattice_ = Lattice::from_rows(moduli.size(), rows);
    out.moduli_ = std::move(moduli);
    return out;
}

Subgroup Subgroup::from_lattice(std::vector<std::int64_t> moduli, Lattice lattice) {
    Subgroup out;
    out.moduli_ = std::move(moduli);
    out.lattice_ = std::move(lattice);
    return out;
}

Subgroup Subgroup::trivial_subgroup(std::vector<std::int64_t> moduli) {
    return generated_by(std::move(moduli), {});
}

Subgroup Subgroup::full(std::vector<std::int64_t> moduli) {
    std::size_t k = moduli.size();
    return from_lattice(std::move(moduli), Lattice::from_hnf(IntMatrix::identity(k)));
}

std::int64_t Subgroup::ambient_order() const {
    std::int64_t o = 1;
    for (std::int64_t m : moduli_) o *= m;
    return o;
}

std::int64_t Subgroup::order() const {
    return static_cast<std::int64_t>(Int(ambient_order() / lattice_.index()));
}

std::int64_t Subgroup::exponent() const {
    auto s = structure();
    return s.invariant_factors.empty() ? 1 : s.invariant_factors.front();
}

bool Subgroup::contains(const Element& e) const {
    std::vector<Int> v(e.begin(), e.end());
    return lattice_.contains(v);
}

std::vector<Subgroup::Element> Subgroup::elements() const {
    // Closure of the generators under addition; the subgroup order bounds it.
    const std::size_t k = moduli_.size();
    auto gens = element_generators();
    std::unordered_set<std::int64_t> seen;
    std::vector<Element> out;
    std::vector<Element> frontier;
    auto code = [&](const Element& e) {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < k; ++i) c = c * moduli_[i] + e[i];
        return c;
    };
    Element zero(k, 0);
    seen.insert(code(zero));
    out.push_back(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        Element cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : gens) {
            Element nxt(k);
            for (std::size_t i = 0; i < k; ++i) {
                nxt[i] = cur[i] + g[i];
                if (nxt[i] >= moduli_[i]) nxt[i] -= moduli_[i];
            }
            if (seen.insert(code(nxt)).second) {
                out.push_back(nxt);
                frontier.push_back(nxt);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subgroup::Element> Subgroup::element_generators() const {
    std::vector<Element> out;
    const auto& h = lattice_.basis();
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        Element e(moduli_.size());
        bool nonzero = false;
        for (std::size_t j = 0; j < moduli_.size(); ++j) {
            e[j] = static_cast<std::int64_t>(Int(h(i, j) % moduli_[j]));
            if (e[j] < 0) e[j] += moduli_[j];
            if (e[j] != 0) nonzero = true;
        }
        if (nonzero) out.push_back(std::move(e));
    }
    return out;
}

AbelianStructure Subgroup::structure() const {
    // S = L / diag(m): present S on the basis rows of L; the relations are
    // the coordinates of m_i e_i in that basis (exact by containment).
    const std::size_t k = moduli_.size();
    const IntMatrix& h = lattice_.basis();
    IntMatrix rel(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> w(k, 0);
        w[i] = moduli_[i];
        for (std::size_t j = 0; j < k; ++j) {
            Int q = w[j] / h(j, j);
            rel(i, j) = q;
            if (q == 0) continue;
            for (std::size_t c = j; c < k; ++c) w[c] -= q * h(j, c);
        }
    }
    return cokernel(rel);
}

Subgroup Subgroup::project(std::size_t from, std::size_t to) const {
    std::vector<std::int64_t> sub_moduli(moduli_.begin() + static_cast<std::ptrdiff_t>(from),
                                         moduli_.begin() + static_cast<std::ptrdiff_t>(to));
    std::vector<Element> gens;
    for (const auto& g : element_generators()) {
        gens.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(from),
                          g.begin() + static_cast<std::ptrdiff_t>(to));
    }
    return generated_by(std::move(sub_moduli), gens);
}

Subgroup Subgroup::rescale(const std::vector<std::int64_t>& new_moduli) const {
    if (new_moduli.size() != moduli_.size()) throw std::invalid_argument("rank mismatch");
    std::vector<Element> gens;
    for (const auto& g : element_generators()) {
        Element e(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (new_moduli[i] % moduli_[i] != 0)
                throw std::invalid_argument("current exponent must divide the new one");
            e[i] = g[i] * (new_moduli[i] / moduli_[i]);
        }
        gens.push_back(std::move(e));
    }
    return generated_by(new_moduli, gens);
}

Subgroup Subgroup::preimage(std::vector<std::int64_t> source_moduli, const IntMatrix& map,
                            const Subgroup& target) {
    const std::size_t ks = source_moduli.size();
    const std::size_t kt = target.moduli_.size();
    if (map.rows() != ks || map.cols() != kt) throw std::invalid_argument("map shape mismatch");
    // Solve w * map = z * H_target: integer kernel of the stacked matrix.
    const IntMatrix& ht = target.lattice_.basis();
    IntMatrix stacked(ks + kt, kt);
    for (std::size_t i = 0; i < ks; ++i)
        for (std::size_t j = 0; j < kt; ++j) stacked(i, j) = map(i, j);
    for (std::size_t i = 0; i < kt; ++i)
        for (std::size_t j = 0; j < kt; ++j) stacked(ks + i, j) = -ht(i, j);
    SmithDecomposition snf = smith_normal_form(stacked);
    std::size_t rank = snf.rank();
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = rank; i < ks + kt; ++i) {
        std::vector<Int> full = snf.u.row(i);
        rows.emplace_back(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(ks));
    }
    for (std::size_t i = 0; i < ks; ++i) {
        std::vector<Int> v(ks, 0);
        v[i] = source_moduli[i];
        rows.push_back(std::move(v));
    }
    Subgroup out;
    out.lattice_ = Lattice::from_rows(ks, rows);
    out.moduli_ = std::move(source_moduli);
    return out;
}

bool Subgroup::operator<(const Subgroup& other) const {
    if (moduli_ != other.moduli_) return moduli_ < other.moduli_;
    return lattice_ < other.lattice_;
}

std::string Subgroup::to_string() const {
    std::ostringstream os;
    os << "<";
    bool first = true;
    for (const auto& g : element_generators()) {
        if (!first) os << ", ";
        first = false;
        os << "(";
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i > 0) os << ",";
            os << g[i] << "/" << moduli_[i];
        }
        os << ")";
    }
    os << ">";
    return os.str();
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, std::int64_t order) {
    return enumerate_subgroups(g.factors(), order);
}

std::vector<Subgroup> enumerate_subgroups(const std::vector<std::int64_t>& moduli,
                                          std::int64_t order) {
    std::int64_t ambient = 1;
    for (std::int64_t m : moduli) {
        if (m < 1) throw std::invalid_argument("ambient modulus must be >= 1");
        ambient *= m;
    }
    if (order < 1 || ambient % order != 0)
        throw std::invalid_argument("subgroup order must divide the ambient order");
    std::vector<Subgroup> out;
    for (Lattice& l : enumerate_lattices(moduli.size(), ambient / order, moduli)) {
        out.push_back(Subgroup::from_lattice(moduli, std::move(l)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup dual_of_surjection(const FiniteAbelianGroup& a, const IntMatrix& f) {
    const std::size_t h = f.rows();
    const std::size_t r = a.rank();
    if (f.cols() != r) throw std::invalid_argument("surjection matrix has wrong width");

    // Surjectivity: rows of f together with the torsion relations must
    // present the trivial group.
    IntMatrix check(h + r, r);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < r; ++j) check(i, j) = f(i, j);
    for (std::size_t j = 0; j < r; ++j) check(h + j, j) = a.factors()[j];
    AbelianStructure coker = cokernel(check);
    if (coker.free_rank != 0 || !coker.invariant_factors.empty())
        throw NotSurjective("map does not present a surjection onto the group");

    const std::int64_t e = a.exponent();
    std::vector<std::int64_t> moduli(h, e);
    std::vector<Subgroup::Element> gens;
    for (std::size_t j = 0; j < r; ++j) {
        // Character dual to the j-th invariant-factor generator, pulled back.
        Subgroup::Element g(h);
        const std::int64_t scale = e / a.factors()[j];
        for (std::size_t i = 0; i < h; ++i) {
            g[i] = mod_norm(static_cast<std::int64_t>(Int(f(i, j) % a.factors()[j])) * scale, e);
        }
        gens.push_back(std::move(g));
    }
    return Subgroup::generated_by(std::move(moduli), gens);
}

std::vector<Subgroup> subgroups_with_projection(std::int64_t m, std::size_t h,
                                                const Subgroup& a_star) {
    if (a_star.moduli().size() != h) throw std::invalid_argument("a_star rank mismatch");
    if (m % a_star.order() != 0)
        throw std::invalid_argument("|a_star| must divide the subgroup order");
    const std::int64_t big = lcm64(m, a_star.exponent());
    std::vector<std::int64_t> moduli(1 + h, big);
    Subgroup target = a_star.rescale(std::vector<std::int64_t>(h, big));
    std::vector<Subgroup> out;
    for (const Subgroup& s : enumerate_subgroups(moduli, m)) {
        if (s.project(1, 1 + h) == target) out.push_back(s);
    }
    return out;
}

AbelianStructure pushout(const FiniteAbelianGroup& a, const IntMatrix& a_map,
                         const IntMatrix& g_map) {
    const std::size_t r = a_map.rows();
    if (g_map.rows() != r) throw std::invalid_argument("pushout legs disagree on the source rank");
    const std::size_t s = g_map.cols();
    const std::size_t ra = a.rank();
    IntMatrix rel(r + ra, s + ra);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < s; ++j) rel(i, j) = g_map(i, j);
        for (std::size_t j = 0; j < ra; ++j) rel(i, s + j) = -a_map(i, j);
    }
    for (std::size_t j = 0; j < ra; ++j) rel(r + j, s + j) = a.factors()[j];
    return cokernel(rel);
}

}  // namespace slab
