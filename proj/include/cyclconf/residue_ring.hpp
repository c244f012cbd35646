// residue_ring.hpp
// Exact arithmetic in Z_v: factorization, Euler phi, the multiplicative
// function Phi(v) = v * prod(1 + 1/p), unit orders, multiplier orbits,
// subgroup cosets and the CI-order predicate.
//
// Everything here is integer arithmetic on std::uint64_t; v never exceeds
// kFormulaLimit (1e9), so a product of two residues fits in 64 bits.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cyclconf {

using Residue = std::uint64_t;

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

namespace detail {

inline std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

}  // namespace detail

/// The ring Z_v together with its cached prime factorization.
class Modulus {
public:
    explicit Modulus(std::uint64_t v) : v_(v) {
        detail::require(v >= 1, "modulus must be at least 1");
        if (v > kFormulaLimit) throw limit_exceeded(v, kFormulaLimit, "modulus");
        factors_ = detail::factorize(v);
    }

    std::uint64_t value() const noexcept { return v_; }
    /// Prime powers p_i^{n_i} with p_i strictly increasing.
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    std::size_t distinct_primes() const noexcept { return factors_.size(); }

    Residue reduce(std::int64_t x) const {
        auto m = static_cast<std::int64_t>(v_);
        auto r = x % m;
        return static_cast<Residue>(r < 0 ? r + m : r);
    }
    Residue add(Residue a, Residue b) const { return (a + b) % v_; }
    Residue sub(Residue a, Residue b) const { return (a + v_ - b % v_) % v_; }
    Residue mul(Residue a, Residue b) const { return (a % v_) * (b % v_) % v_; }
    Residue neg(Residue a) const { return (v_ - a % v_) % v_; }

    Residue pow(Residue base, std::uint64_t e) const {
        Residue result = 1 % v_;
        base %= v_;
        while (e > 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }

    bool is_unit(Residue x) const { return std::gcd(x % v_, v_) == 1; }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.v_ == b.v_; }

private:
    std::uint64_t v_;
    std::vector<PrimePower> factors_;
};

/// An element of Z_v^*.
class Unit {
public:
    Unit(const Modulus& m, Residue x) : value_(x % m.value()), v_(m.value()) {
        if (!m.is_unit(x)) throw std::invalid_argument("residue is not a unit modulo v");
    }

    Residue value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return v_; }

private:
    Residue value_;
    std::uint64_t v_;
};

inline std::uint64_t phi(const Modulus& m) {
    std::uint64_t r = m.value();
    for (const auto& f : m.factors()) r = r / f.prime * (f.prime - 1);
    return r;
}

inline std::uint64_t big_phi(const Modulus& m) {
    std::uint64_t r = m.value();
    for (const auto& f : m.factors()) r = r / f.prime * (f.prime + 1);
    return r;
}

inline std::uint64_t phi(std::uint64_t v) { return phi(Modulus(v)); }
inline std::uint64_t big_phi(std::uint64_t v) { return big_phi(Modulus(v)); }

/// Multiplicative inverse of a unit.
inline Residue inverse(const Modulus& m, Residue a) {
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(m.value());
    auto new_r = static_cast<std::int64_t>(a % m.value());
    while (new_r != 0) {
        auto q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("residue is not invertible");
    return m.reduce(t);
}

/// Smallest m >= 1 with l^m = 1; divides phi(v).
inline std::uint64_t mult_order(const Modulus& m, const Unit& l) {
    detail::require(l.modulus() == m.value(), "unit belongs to a different modulus");
    std::uint64_t order = phi(m);
    for (const auto& f : detail::factorize(order)) {
        for (unsigned i = 0; i < f.exponent; ++i) {
            if (m.pow(l.value(), order / f.prime) != 1 % m.value()) break;
            order /= f.prime;
        }
    }
    return order;
}

/// Units of Z_v in increasing order.
inline std::vector<Residue> units(const Modulus& m) {
    detail::enforce_cap(m.value(), kEnumerationLimit, "unit enumeration");
    std::vector<Residue> out;
    out.reserve(phi(m));
    for (Residue x = 0; x < m.value(); ++x)
        if (m.is_unit(x)) out.push_back(x);
    return out;
}

/// Orbits of Z_v under x -> l x. Blocks are listed by smallest member; each
/// block in orbit order x, lx, l^2 x, ...
inline std::vector<std::vector<Residue>> multiplier_orbits(const Modulus& m, const Unit& l) {
    detail::enforce_cap(m.value(), kEnumerationLimit, "multiplier orbits");
    std::vector<bool> seen(m.value(), false);
    std::vector<std::vector<Residue>> blocks;
    for (Residue x = 0; x < m.value(); ++x) {
        if (seen[x]) continue;
        std::vector<Residue> block;
        for (Residue y = x; !seen[y]; y = m.mul(l.value(), y)) {
            seen[y] = true;
            block.push_back(y);
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

/// True iff Z_v is a CI-group: v = 4 or gcd(v, phi(v)) = 1.
inline bool is_ci_order(const Modulus& m) {
    return m.value() == 4 || std::gcd(m.value(), phi(m)) == 1;
}

/// Cosets of the order-d subgroup {0, v/d, 2v/d, ...}, each sorted, listed by
/// smallest member.
inline std::vector<std::vector<Residue>> subgroup_cosets(const Modulus& m, std::uint64_t d) {
    detail::require(d >= 1 && m.value() % d == 0, "d must divide v");
    detail::enforce_cap(m.value(), kEnumerationLimit, "subgroup cosets");
    const std::uint64_t step = m.value() / d;
    std::vector<std::vector<Residue>> out;
    for (Residue r = 0; r < step; ++r) {
        std::vector<Residue> coset;
        for (std::uint64_t t = 0; t < d; ++t) coset.push_back(r + t * step);
        out.push_back(std::move(coset));
    }
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace cyclconf
