// baseline.hpp
// Base lines of cyclic configurations: k-subsets S of Z_v whose k(k-1)
// nonzero differences are pairwise distinct, so |S - S| = k^2 - k + 1.
// Recognition, enumeration of B(v,k) / B_con(v,k), and canonical forms
// under the affine group AGL_1(v) acting by S -> aS + b.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "residue_ring.hpp"

namespace cyclconf {

/// Sorted, duplicate-free residues.
using ResidueSet = std::vector<Residue>;

/// Default enumeration caps on v, by line size.
inline std::uint64_t default_cap(std::size_t k) {
    if (k <= 3) return 300;
    if (k == 4) return 60;
    return 40;
}

inline ResidueSet normalize_set(const Modulus& m, std::vector<Residue> xs) {
    for (auto& x : xs) x %= m.value();
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

/// x -> a x + b on Z_v, a a unit.
struct AffineMap {
    Residue a = 1;
    Residue b = 0;

    Residue operator()(const Modulus& m, Residue x) const { return m.add(m.mul(a, x), b); }

    ResidueSet apply(const Modulus& m, const ResidueSet& s) const {
        ResidueSet out;
        out.reserve(s.size());
        for (auto x : s) out.push_back((*this)(m, x));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
    friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

inline ResidueSet difference_set(const ResidueSet& s, const Modulus& m) {
    detail::require(!s.empty(), "difference set of an empty set");
    std::vector<Residue> diffs;
    diffs.reserve(s.size() * s.size());
    for (auto x : s)
        for (auto y : s) diffs.push_back(m.sub(x, y));
    return normalize_set(m, std::move(diffs));
}

inline bool is_base_line(const ResidueSet& s, const Modulus& m, std::size_t k) {
    detail::require(k >= 3, "line size k must be at least 3");
    const auto reduced = normalize_set(m, s);
    if (reduced.size() != k || s.size() != k) return false;
    return difference_set(reduced, m).size() == k * k - k + 1;
}

/// True iff some coset of a prime-order subgroup of Z_v lies inside s.
inline bool contains_coset(const ResidueSet& s, const Modulus& m) {
    const auto set = normalize_set(m, s);
    for (const auto& f : m.factors()) {
        const std::uint64_t step = m.value() / f.prime;
        for (auto x : set) {
            bool all = true;
            for (std::uint64_t t = 1; t < f.prime && all; ++t)
                all = std::binary_search(set.begin(), set.end(), m.add(x, t * step));
            if (all) return true;
        }
    }
    return false;
}

/// A validated base line of a cyclic (v_k) configuration.
class BaseLine {
public:
    BaseLine(const Modulus& m, std::vector<Residue> elements)
        : modulus_(m), elements_(normalize_set(m, elements)) {
        if (elements_.size() != elements.size())
            throw std::invalid_argument("base line has repeated residues modulo v");
        if (elements_.size() < 3) throw std::invalid_argument("base line needs at least 3 points");
        if (!is_base_line(elements_, modulus_, elements_.size()))
            throw std::invalid_argument("set has repeated differences; not a base line");
    }

    BaseLine(std::uint64_t v, std::vector<Residue> elements)
        : BaseLine(Modulus(v), std::move(elements)) {}

    const Modulus& modulus() const noexcept { return modulus_; }
    std::uint64_t v() const noexcept { return modulus_.value(); }
    std::size_t k() const noexcept { return elements_.size(); }
    const ResidueSet& elements() const noexcept { return elements_; }

    friend bool operator==(const BaseLine& a, const BaseLine& b) {
        return a.v() == b.v() && a.elements_ == b.elements_;
    }
    friend bool operator<(const BaseLine& a, const BaseLine& b) {
        if (a.v() != b.v()) return a.v() < b.v();
        return a.elements_ < b.elements_;
    }

private:
    Modulus modulus_;
    ResidueSet elements_;
};

inline std::string format_residues(const ResidueSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const BaseLine& b) {
    return os << '{' << format_residues(b.elements()) << "} mod " << b.v();
}

/// <S - S> = Z_v, i.e. the gcd of v and all differences is 1.
inline bool is_connected(const ResidueSet& s, const Modulus& m) {
    std::uint64_t g = m.value();
    for (auto x : s) g = std::gcd(g, m.sub(x, s.front()));
    return g == 1;
}

inline bool is_connected(const BaseLine& b) { return is_connected(b.elements(), b.modulus()); }

namespace detail {

// Depth-first search over increasing tuples 0 = s_0 < s_1 < ... with all
// nonzero differences distinct. Emits in lexicographic order.
template <class Emit>
void search_sidon(const Modulus& m, std::size_t k, ResidueSet& cur, std::vector<char>& used,
                  Emit& emit) {
    if (cur.size() == k) {
        emit(cur);
        return;
    }
    const Residue v = m.value();
    // Room must remain for the rest of the tuple.
    const Residue last = v - (k - cur.size()) + 1;
    std::vector<Residue> marked;
    marked.reserve(2 * cur.size());
    for (Residue x = cur.back() + 1; x < last; ++x) {
        marked.clear();
        bool ok = true;
        for (auto s : cur) {
            const Residue d = x - s;
            const Residue e = v - d;
            if (d == e || used[d] || used[e]) {
                ok = false;
                break;
            }
            used[d] = used[e] = 1;
            marked.push_back(d);
            marked.push_back(e);
        }
        if (ok) {
            cur.push_back(x);
            search_sidon(m, k, cur, used, emit);
            cur.pop_back();
        }
        for (auto d : marked) used[d] = 0;
    }
}

template <class Emit>
void for_each_base_line_with_zero(const Modulus& m, std::size_t k, Emit&& emit) {
    if (k * k - k + 1 > m.value()) return;
    ResidueSet cur{0};
    std::vector<char> used(m.value(), 0);
    search_sidon(m, k, cur, used, emit);
}

inline ResidueSet canonical_set(const ResidueSet& s, const Modulus& m,
                                const std::vector<Residue>& unit_list) {
    ResidueSet best, trial(s.size());
    for (auto a : unit_list) {
        for (auto pivot : s) {
            for (std::size_t i = 0; i < s.size(); ++i) trial[i] = m.mul(a, m.sub(s[i], pivot));
            std::sort(trial.begin(), trial.end());
            if (best.empty() || trial < best) best = trial;
        }
    }
    return best;
}

}  // namespace detail

/// Members of B(v,k) (or B_con(v,k)) that contain 0, in lexicographic order.
/// Every AGL_1(v) orbit, indeed every translation class, meets this slice.
inline std::vector<BaseLine> enumerate_base_lines(const Modulus& m, std::size_t k,
                                                  bool connected_only, std::uint64_t cap) {
    detail::require(k >= 3, "line size k must be at least 3");
    detail::enforce_cap(m.value(), cap, "base line enumeration");
    std::vector<BaseLine> out;
    detail::for_each_base_line_with_zero(m, k, [&](const ResidueSet& s) {
        if (!connected_only || is_connected(s, m)) out.emplace_back(m, s);
    });
    return out;
}

inline std::vector<BaseLine> enumerate_base_lines(const Modulus& m, std::size_t k,
                                                  bool connected_only) {
    return enumerate_base_lines(m, k, connected_only, default_cap(k));
}

/// Every member of B(v,k) (or B_con(v,k)), all translates included, sorted.
inline std::vector<BaseLine> all_base_lines(const Modulus& m, std::size_t k, bool connected_only,
                                            std::uint64_t cap) {
    std::vector<ResidueSet> sets;
    for (const auto& b : enumerate_base_lines(m, k, connected_only, cap)) {
        for (Residue t = 0; t < m.value(); ++t) sets.push_back(AffineMap{1, t}.apply(m, b.elements()));
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<BaseLine> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.emplace_back(m, std::move(s));
    return out;
}

/// Lexicographically least sorted tuple in the AGL_1(v) orbit of b.
inline BaseLine canonical_form(const BaseLine& b) {
    return BaseLine(b.modulus(), detail::canonical_set(b.elements(), b.modulus(), units(b.modulus())));
}

/// The full AGL_1(v) orbit of b, sorted.
inline std::vector<ResidueSet> affine_orbit(const BaseLine& b) {
    const auto& m = b.modulus();
    std::set<ResidueSet> orbit;
    for (auto a : units(m))
        for (Residue t = 0; t < m.value(); ++t) orbit.insert(AffineMap{a, t}.apply(m, b.elements()));
    return {orbit.begin(), orbit.end()};
}

/// Canonical orbit representatives of AGL_1(v) on B(v,k) or B_con(v,k), sorted.
inline std::vector<BaseLine> orbit_representatives(const Modulus& m, std::size_t k,
                                                   bool connected_only, std::uint64_t cap) {
    detail::require(k >= 3, "line size k must be at least 3");
    detail::enforce_cap(m.value(), cap, "orbit representatives");
    const auto unit_list = units(m);
    // The slice arrives in lexicographic order and every canonical form
    // contains 0, so the first unseen member of an orbit is its canonical form.
    std::vector<ResidueSet> reps;
    std::set<ResidueSet> seen;
    ResidueSet trial(k);
    detail::for_each_base_line_with_zero(m, k, [&](const ResidueSet& s) {
        if ((connected_only && !is_connected(s, m)) || seen.count(s)) return;
        reps.push_back(s);
        for (auto a : unit_list) {
            for (auto pivot : s) {
                for (std::size_t i = 0; i < k; ++i) trial[i] = m.mul(a, m.sub(s[i], pivot));
                std::sort(trial.begin(), trial.end());
                seen.insert(trial);
            }
        }
    });
    std::vector<BaseLine> out;
    out.reserve(reps.size());
    for (auto& s : reps) out.emplace_back(m, std::move(s));
    return out;
}

inline std::vector<BaseLine> orbit_representatives(const Modulus& m, std::size_t k,
                                                   bool connected_only) {
    return orbit_representatives(m, k, connected_only, default_cap(k));
}

}  // namespace cyclconf
