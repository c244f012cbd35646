// iso.hpp
// Isomorphism of cyclic configurations.
//
// Two routes: multiplier equivalence (S2 = a S1 + b with a a unit), and an
// exact color-preserving isomorphism search on the Levi graphs, which
// serves as the oracle for everything else. Points map to points and lines
// to lines; point/line duality is not considered.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include "baseline.hpp"
#include "bipartite_iso.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "residue_ring.hpp"

namespace cyclconf {

/// S2 = a S1 + b.
struct MultiplierWitness {
    Residue a = 1;
    Residue b = 0;

    friend bool operator==(const MultiplierWitness&, const MultiplierWitness&) = default;
};

/// Point i of C1 goes to points[i]; line S1 + j goes to line S2 + lines[j].
struct ExplicitWitness {
    std::vector<Residue> points;
    std::vector<Residue> lines;

    friend bool operator==(const ExplicitWitness&, const ExplicitWitness&) = default;
};

using IsoWitness = std::variant<MultiplierWitness, ExplicitWitness>;

/// Least (a, b) in lexicographic order with S2 = a S1 + b.
inline std::optional<MultiplierWitness> multiplier_equivalent(const Modulus& m, const ResidueSet& s1,
                                                              const ResidueSet& s2) {
    const auto a1 = normalize_set(m, s1);
    const auto a2 = normalize_set(m, s2);
    if (a1.size() != a2.size() || a1.empty()) return std::nullopt;
    detail::enforce_cap(m.value(), kEnumerationLimit, "multiplier_equivalent");
    std::vector<Residue> shifts;
    for (auto a : units(m)) {
        // a S1 + b contains min(S2) only if b = min(S2) - a s for some s.
        shifts.clear();
        for (auto s : a1) shifts.push_back(m.sub(a2.front(), m.mul(a, s)));
        std::sort(shifts.begin(), shifts.end());
        for (auto b : shifts)
            if (AffineMap{a, b}.apply(m, a1) == a2) return MultiplierWitness{a, b};
    }
    return std::nullopt;
}

inline std::optional<MultiplierWitness> multiplier_equivalent(const CyclicConfiguration& c1,
                                                              const CyclicConfiguration& c2) {
    detail::require(c1.v() == c2.v(), "configurations must share v");
    return multiplier_equivalent(c1.modulus(), c1.base().elements(), c2.base().elements());
}

/// Replays a witness: every line of C1 must land on a line of C2.
inline bool verify_witness(const CyclicConfiguration& c1, const CyclicConfiguration& c2, const IsoWitness& w) {
    if (c1.v() != c2.v() || c1.k() != c2.k()) return false;
    const auto& m = c1.modulus();
    if (const auto* mw = std::get_if<MultiplierWitness>(&w)) {
        if (!m.is_unit(mw->a)) return false;
        return AffineMap{mw->a, mw->b}.apply(m, c1.base().elements()) == c2.base().elements();
    }
    const auto& ew = std::get<ExplicitWitness>(w);
    const auto v = c1.v();
    if (ew.points.size() != v || ew.lines.size() != v) return false;
    std::vector<char> hit(v, 0);
    for (auto p : ew.points) {
        if (p >= v || hit[p]) return false;
        hit[p] = 1;
    }
    for (Residue j = 0; j < v; ++j) {
        ResidueSet image;
        for (auto x : c1.line(j)) image.push_back(ew.points[x]);
        std::sort(image.begin(), image.end());
        if (ew.lines[j] >= v || image != c2.line(ew.lines[j])) return false;
    }
    return true;
}

/// Exact isomorphism by refinement-and-backtracking on the Levi graphs.
inline std::optional<ExplicitWitness> exact_isomorphic(const CyclicConfiguration& c1, const CyclicConfiguration& c2,
                                                       std::uint64_t cap = kEnumerationLimit) {
    detail::require(c1.v() == c2.v(), "configurations must share v");
    detail::enforce_cap(c1.v(), cap, "exact_isomorphic");
    if (c1.k() != c2.k()) return std::nullopt;
    const auto v = c1.v();
    // Translations are transitive on the points of C2, so P_0 may go to P_0.
    const auto map = find_isomorphism(levi_graph(c1).colored(), levi_graph(c2).colored(), {{0, 0}});
    if (!map) return std::nullopt;
    ExplicitWitness w{std::vector<Residue>(v), std::vector<Residue>(v)};
    for (Residue i = 0; i < v; ++i) {
        w.points[i] = (*map)[i];
        w.lines[i] = (*map)[v + i] - v;
    }
    return w;
}

/// Point permutations that preserve the line set.
inline std::vector<std::vector<Residue>> automorphism_group(const CyclicConfiguration& c,
                                                            std::uint64_t cap = kEnumerationLimit) {
    detail::enforce_cap(c.v(), cap, "automorphism_group");
    std::vector<std::vector<Residue>> out;
    for (const auto& map : automorphisms(levi_graph(c).colored()))
        out.emplace_back(map.begin(), map.begin() + static_cast<std::ptrdiff_t>(c.v()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Lifts an isomorphism between components con(Z_d, T1/g) -> con(Z_d, T2/g)
/// to con(Z_v, S1) -> con(Z_v, S2), where T = S - min(S) and v = g d.
/// A point g y + r (0 <= r < g) goes to g psi(y) + r.
inline ExplicitWitness lift_component_witness(const CyclicConfiguration& c1, const CyclicConfiguration& c2,
                                              std::uint64_t g, const std::vector<Residue>& psi) {
    const auto v = c1.v();
    ExplicitWitness w{std::vector<Residue>(v), std::vector<Residue>(v)};
    for (Residue x = 0; x < v; ++x) w.points[x] = g * psi[x / g] + x % g;
    for (Residue j = 0; j < v; ++j) {
        ResidueSet image;
        for (auto x : c1.line(j)) image.push_back(w.points[x]);
        std::sort(image.begin(), image.end());
        w.lines[j] = c2.line_index(image).value_or(v);
    }
    return w;
}

inline std::ostream& operator<<(std::ostream& os, const IsoWitness& w) {
    if (const auto* mw = std::get_if<MultiplierWitness>(&w)) return os << "a=" << mw->a << " b=" << mw->b;
    const auto& ew = std::get<ExplicitWitness>(w);
    os << "points=";
    for (std::size_t i = 0; i < ew.points.size(); ++i) os << (i ? "," : "") << ew.points[i];
    os << " lines=";
    for (std::size_t i = 0; i < ew.lines.size(); ++i) os << (i ? "," : "") << ew.lines[i];
    return os;
}

}  // namespace cyclconf
