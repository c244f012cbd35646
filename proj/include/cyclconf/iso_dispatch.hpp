// iso_dispatch.hpp
// Method selection for isomorphism of cyclic configurations.
//
// auto: for connected inputs the multiplier sweep is complete when k <= 4,
// when v = pq or v = p^n, and when Z_v is a CI-group; anything else goes to
// the exact Levi-graph search. Disconnected inputs are split into their
// identical connected components, the components are compared (recursively,
// with the same rules on Z_d), and a component isomorphism is lifted back.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "config.hpp"
#include "iso.hpp"
#include "residue_ring.hpp"
#include "solving_sets.hpp"

namespace cyclconf {

enum class IsoMethod { automatic, multiplier, exact, solving_set };

inline std::optional<IsoMethod> parse_iso_method(std::string_view s) {
    if (s == "auto") return IsoMethod::automatic;
    if (s == "multiplier") return IsoMethod::multiplier;
    if (s == "exact") return IsoMethod::exact;
    if (s == "solving-set" || s == "solving_set") return IsoMethod::solving_set;
    return std::nullopt;
}

inline std::string to_string(IsoMethod m) {
    switch (m) {
        case IsoMethod::automatic: return "auto";
        case IsoMethod::multiplier: return "multiplier";
        case IsoMethod::exact: return "exact";
        case IsoMethod::solving_set: return "solving-set";
    }
    return "?";
}

struct IsoDecision {
    std::optional<IsoWitness> witness;
    IsoMethod method = IsoMethod::automatic;  // the method that decided
    bool componentwise = false;
};

/// True when multiplier equivalence is known to coincide with isomorphism
/// for connected cyclic configurations of this order and line size.
inline bool multiplier_method_complete(const Modulus& m, std::size_t k) {
    if (k <= 4 || is_ci_order(m)) return true;
    const auto& f = m.factors();
    if (f.size() == 1) return true;  // p^n
    return f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1;  // pq
}

inline IsoDecision isomorphic(const CyclicConfiguration& c1, const CyclicConfiguration& c2,
                              IsoMethod method = IsoMethod::automatic, std::uint64_t cap = kEnumerationLimit) {
    detail::require(c1.v() == c2.v(), "configurations must share v");
    IsoDecision out;
    if (c1.k() != c2.k()) {
        out.method = method;
        return out;
    }
    switch (method) {
        case IsoMethod::multiplier:
            out.method = method;
            if (auto w = multiplier_equivalent(c1, c2)) out.witness = *w;
            return out;
        case IsoMethod::exact:
            out.method = method;
            if (auto w = exact_isomorphic(c1, c2, cap)) out.witness = *w;
            return out;
        case IsoMethod::solving_set:
            out.method = method;
            out.witness = solve_iso_pq(c1, c2).witness;
            return out;
        case IsoMethod::automatic:
            break;
    }

    const bool connected = is_connected(c1.base()) && is_connected(c2.base());
    if (connected) {
        if (multiplier_method_complete(c1.modulus(), c1.k())) return isomorphic(c1, c2, IsoMethod::multiplier, cap);
        return isomorphic(c1, c2, IsoMethod::exact, cap);
    }

    out.componentwise = true;
    const auto parts1 = decompose(c1);
    const auto parts2 = decompose(c2);
    if (parts1.size() != parts2.size()) {
        out.method = IsoMethod::multiplier;
        return out;
    }
    const auto& m = c1.modulus();
    const std::uint64_t g = parts1.size();
    const std::uint64_t d = c1.v() / g;
    auto scaled_component = [&](const CyclicConfiguration& c) {
        const auto& s = c.base().elements();
        std::vector<Residue> t;
        for (auto x : s) t.push_back(m.sub(x, s.front()) / g);
        return CyclicConfiguration(d, t);
    };
    const auto comp1 = scaled_component(c1);
    const auto comp2 = scaled_component(c2);
    const auto inner = isomorphic(comp1, comp2, IsoMethod::automatic, cap);
    out.method = inner.method;
    if (!inner.witness) return out;

    std::vector<Residue> psi(d);
    if (const auto* mw = std::get_if<MultiplierWitness>(&*inner.witness)) {
        for (Residue y = 0; y < d; ++y) psi[y] = AffineMap{mw->a, mw->b}(comp1.modulus(), y);
    } else {
        psi = std::get<ExplicitWitness>(*inner.witness).points;
    }
    out.witness = lift_component_witness(c1, c2, g, psi);
    return out;
}

}  // namespace cyclconf
