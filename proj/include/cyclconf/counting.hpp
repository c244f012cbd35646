// counting.hpp
// Number of non-isomorphic connected cyclic (v_3) configurations.
//
// Three independent routes are provided and must agree:
//   count_formula  closed form with the alpha/beta case table,
//   count_sum      Phi(v)/6 - 1 + gamma1/2 + gamma2/3 (minus phi(v/2)/phi(v)
//                  for even v) with gamma1, gamma2 found by iterating units,
//   count_orbits   AGL_1(v) orbits on B_con(v,3) by canonical forms.
// The Burnside route sums N(v,3,l) over units l, either from the closed
// per-unit cases or by brute force.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include <boost/rational.hpp>

#include "baseline.hpp"
#include "errors.hpp"
#include "residue_ring.hpp"

namespace cyclconf {

using Fraction = boost::rational<std::int64_t>;

namespace detail {

inline void require_formula_range(std::uint64_t v) {
    if (v <= 4) throw std::domain_error("counting formulas need v > 4");
}

inline std::int64_t exact_integer(const Fraction& f, const char* what) {
    if (f.denominator() != 1) throw std::logic_error(std::string(what) + ": non-integral result");
    return f.numerator();
}

inline std::int64_t to_signed(std::uint64_t x) { return static_cast<std::int64_t>(x); }

}  // namespace detail

/// N(v,3,1) = |{X in B_con(v,3) : 0 in X}|.
inline std::int64_t n_v3_1(std::uint64_t v) {
    detail::require_formula_range(v);
    const Modulus m(v);
    const auto ph = detail::to_signed(phi(m));
    std::int64_t n = ph * (detail::to_signed(big_phi(m)) - 6) / 2;
    if (v % 2 == 0) n -= 3 * detail::to_signed(phi(v / 2));
    return n;
}

/// N(v,3,l) for a unit l != 1, from the order of l.
inline std::int64_t n_v3_l(std::uint64_t v, Residue l) {
    detail::require_formula_range(v);
    const Modulus m(v);
    const Unit unit(m, l);
    if (unit.value() == 1) return n_v3_1(v);
    const auto ph = detail::to_signed(phi(m));
    const Residue sq = m.mul(unit.value(), unit.value());
    if (sq == 1) {
        const bool minus_one = m.add(unit.value(), 1) == 0;
        const bool half_one = v % 4 == 0 && unit.value() % (v / 2) == 1;
        return (minus_one || half_one) ? 0 : 3 * ph / 2;
    }
    if (m.mul(sq, unit.value()) == 1) return m.add(m.add(sq, unit.value()), 1) == 0 ? ph : 0;
    return 0;
}

/// N(v,k,l) = |{X in B_con(v,k) : 0 in X, lX = X - x for some x in X}| by
/// exhaustive scan.
inline std::int64_t n_vkl_bruteforce(std::uint64_t v, std::size_t k, Residue l, std::uint64_t cap) {
    const Modulus m(v);
    detail::require(k >= 3, "line size k must be at least 3");
    detail::enforce_cap(v, cap, "n_vkl_bruteforce");
    const Unit unit(m, l);
    std::int64_t count = 0;
    ResidueSet scaled(k);
    detail::for_each_base_line_with_zero(m, k, [&](const ResidueSet& x) {
        if (!is_connected(x, m)) return;
        for (std::size_t i = 0; i < k; ++i) scaled[i] = m.mul(unit.value(), x[i]);
        std::sort(scaled.begin(), scaled.end());
        for (auto pivot : x) {
            if (AffineMap{1, m.neg(pivot)}.apply(m, x) == scaled) {
                ++count;
                return;
            }
        }
    });
    return count;
}

inline std::int64_t n_vkl_bruteforce(std::uint64_t v, std::size_t k, Residue l) {
    return n_vkl_bruteforce(v, k, l, default_cap(k));
}

/// N(v,k,l) for every unit l from one pass over the base lines containing 0.
inline std::map<Residue, std::int64_t> n_vkl_table(std::uint64_t v, std::size_t k, std::uint64_t cap) {
    const Modulus m(v);
    detail::require(k >= 3, "line size k must be at least 3");
    detail::enforce_cap(v, cap, "n_vkl_table");
    const auto unit_list = units(m);
    std::map<Residue, std::int64_t> table;
    for (auto l : unit_list) table[l] = 0;
    ResidueSet scaled(k), shifted(k);
    detail::for_each_base_line_with_zero(m, k, [&](const ResidueSet& x) {
        if (!is_connected(x, m)) return;
        for (auto l : unit_list) {
            for (std::size_t i = 0; i < k; ++i) scaled[i] = m.mul(l, x[i]);
            std::sort(scaled.begin(), scaled.end());
            for (auto pivot : x) {
                for (std::size_t i = 0; i < k; ++i) shifted[i] = m.sub(x[i], pivot);
                std::sort(shifted.begin(), shifted.end());
                if (shifted == scaled) {
                    ++table[l];
                    break;
                }
            }
        }
    });
    return table;
}

struct Gammas {
    std::int64_t gamma1 = 0;
    std::int64_t gamma2 = 0;

    friend bool operator==(const Gammas&, const Gammas&) = default;
};

/// gamma1 counts order-2 units other than -1 (and other than 1 + v/2 when
/// 4 | v); gamma2 counts order-3 units with l^2 + l + 1 = 0. Direct scan.
inline Gammas gammas(std::uint64_t v) {
    detail::require_formula_range(v);
    Gammas g;
    for (std::uint64_t l = 2; l < v; ++l) {
        // l^2 = 1 or l^3 = 1 already forces gcd(l, v) = 1.
        const std::uint64_t sq = l * l % v;
        if (sq == 1) {
            const bool minus_one = l == v - 1;
            const bool half_one = v % 4 == 0 && l % (v / 2) == 1;
            if (!minus_one && !half_one) ++g.gamma1;
        } else if (sq * l % v == 1 && (sq + l + 1) % v == 0) {
            ++g.gamma2;
        }
    }
    return g;
}

/// Closed form of gamma1 for even v, by v mod 8 and the number of distinct primes.
inline std::int64_t gamma1_closed(std::uint64_t v) {
    detail::require_formula_range(v);
    if (v % 2 != 0) throw std::invalid_argument("gamma1_closed needs even v");
    const auto primes = static_cast<std::int64_t>(Modulus(v).distinct_primes());
    switch (v % 8) {
        case 0: return (std::int64_t{1} << (primes + 1)) - 3;
        case 4: return (std::int64_t{1} << primes) - 3;
        default: return (std::int64_t{1} << (primes - 1)) - 2;
    }
}

enum class PrimeClass {
    odd_all_one_mod_3,     // every p_i = 1 (mod 3)
    odd_three_exactly,     // 3 || v, every other p_i = 1 (mod 3)
    odd_other,
    even_2_or_6_mod_8,
    even_4_mod_8,
    even_0_mod_8,
};

/// Case coefficient of the closed formula: alpha for odd v, beta for even v.
struct AlphaBeta {
    std::optional<Fraction> alpha_odd;
    std::optional<Fraction> beta_even;
    PrimeClass prime_class;
};

inline AlphaBeta alpha_beta(const Modulus& m) {
    const auto v = m.value();
    if (v % 2 == 0) {
        switch (v % 8) {
            case 0: return {std::nullopt, Fraction(1), PrimeClass::even_0_mod_8};
            case 4: return {std::nullopt, Fraction(1, 2), PrimeClass::even_4_mod_8};
            default: return {std::nullopt, Fraction(1, 4), PrimeClass::even_2_or_6_mod_8};
        }
    }
    bool all_one = true;
    bool three_exactly = false;
    for (const auto& f : m.factors()) {
        if (f.prime == 3 && f.exponent == 1) {
            three_exactly = true;
        } else if (f.prime % 3 != 1) {
            all_one = false;
        }
    }
    if (all_one && !three_exactly) return {Fraction(5, 6), std::nullopt, PrimeClass::odd_all_one_mod_3};
    if (all_one && three_exactly) return {Fraction(2, 3), std::nullopt, PrimeClass::odd_three_exactly};
    return {Fraction(1, 2), std::nullopt, PrimeClass::odd_other};
}

/// Closed formula for the number of connected cyclic (v_3) configurations.
inline std::int64_t count_formula(std::uint64_t v) {
    detail::require_formula_range(v);
    const Modulus m(v);
    const auto case_coeff = alpha_beta(m);
    const Fraction two_pow_k(std::int64_t{1} << m.distinct_primes());
    Fraction total(detail::to_signed(big_phi(m)), 6);
    if (v % 2 != 0) {
        total += *case_coeff.alpha_odd * two_pow_k - 2;
    } else {
        total += *case_coeff.beta_even * two_pow_k - 3;
    }
    return detail::exact_integer(total, "count_formula");
}

/// The same count through gamma1 and gamma2.
inline std::int64_t count_sum(std::uint64_t v) {
    detail::require_formula_range(v);
    const Modulus m(v);
    const auto g = gammas(v);
    Fraction total = Fraction(detail::to_signed(big_phi(m)), 6) - 1 + Fraction(g.gamma1, 2) +
                     Fraction(g.gamma2, 3);
    if (v % 2 == 0) total -= Fraction(detail::to_signed(phi(v / 2)), detail::to_signed(phi(m)));
    return detail::exact_integer(total, "count_sum");
}

/// AGL_1(v) orbits on B_con(v,k), counted by distinct canonical forms.
inline std::int64_t count_orbits(std::uint64_t v, std::size_t k, std::uint64_t cap) {
    return static_cast<std::int64_t>(orbit_representatives(Modulus(v), k, true, cap).size());
}

inline std::int64_t count_orbits(std::uint64_t v, std::size_t k) { return count_orbits(v, k, default_cap(k)); }

/// Per-unit Burnside table from the closed per-unit cases.
struct CountBreakdown {
    std::uint64_t v = 0;
    std::map<Residue, std::int64_t> n_by_unit;
    Gammas gamma;
    std::int64_t total = 0;
};

inline CountBreakdown count_breakdown(std::uint64_t v) {
    detail::require_formula_range(v);
    const Modulus m(v);
    CountBreakdown out{v, {}, gammas(v), 0};
    std::int64_t sum = 0;
    for (auto l : units(m)) {
        const auto n = n_v3_l(v, l);
        out.n_by_unit[l] = n;
        sum += n;
    }
    out.total = detail::exact_integer(Fraction(sum, 3 * detail::to_signed(phi(m))), "count_breakdown");
    return out;
}

/// All cyclic (v_3) configurations up to isomorphism, connected or not:
/// each one is v/d copies of a connected cyclic (d_3), d | v.
inline std::int64_t count_all_formula(std::uint64_t v) {
    detail::require_formula_range(v);
    std::int64_t total = 0;
    for (std::uint64_t d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        if (d > 4) total += count_formula(d);
        if (v / d != d && v / d > 4) total += count_formula(v / d);
    }
    return total;
}

}  // namespace cyclconf
