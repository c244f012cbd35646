// solving_sets.hpp
// Solving sets for cyclic configurations on v = pq points, q | p - 1.
//
// Permutations act on the right: in a product s t, s is applied first.
// With a of order p - 1 in Z_v^* and a = 1 (mod q), b = a^((p-1)/q):
//   * if x -> bx is not an automorphism of X, the multipliers Z_v^* already
//     form a solving set;
//   * otherwise (and if tau_0 is not an automorphism) the finite set
//       { mu_a^i nu_k mu_j^-1 : 0 <= i < beta, 0 < j <= q-1, 0 <= k <= q-1,
//         prod_l tau_l^(b^((l+1)k)) in Aut(X) }
//     is one, beta being the least positive power with mu_a^beta in Aut(X).

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "iso.hpp"
#include "residue_ring.hpp"

namespace cyclconf {

/// A permutation of Z_v as an image table.
class PointPermutation {
public:
    explicit PointPermutation(std::vector<Residue> image) : image_(std::move(image)) {}

    static PointPermutation identity(std::uint64_t v) {
        std::vector<Residue> id(v);
        std::iota(id.begin(), id.end(), Residue{0});
        return PointPermutation(std::move(id));
    }

    Residue operator()(Residue x) const { return image_[x]; }
    const std::vector<Residue>& image() const noexcept { return image_; }
    std::uint64_t v() const noexcept { return image_.size(); }

    bool is_bijective() const {
        std::vector<char> hit(image_.size(), 0);
        for (auto y : image_) {
            if (y >= image_.size() || hit[y]) return false;
            hit[y] = 1;
        }
        return true;
    }

    /// this first, then next.
    PointPermutation then(const PointPermutation& next) const {
        std::vector<Residue> out(image_.size());
        for (std::size_t x = 0; x < image_.size(); ++x) out[x] = next.image_[image_[x]];
        return PointPermutation(std::move(out));
    }

    PointPermutation inverse() const {
        std::vector<Residue> out(image_.size());
        for (std::size_t x = 0; x < image_.size(); ++x) out[image_[x]] = x;
        return PointPermutation(std::move(out));
    }

    PointPermutation power(std::uint64_t e) const {
        auto result = identity(v());
        auto base = *this;
        while (e > 0) {
            if (e & 1U) result = result.then(base);
            base = base.then(base);
            e >>= 1U;
        }
        return result;
    }

    friend bool operator==(const PointPermutation&, const PointPermutation&) = default;
    friend auto operator<=>(const PointPermutation&, const PointPermutation&) = default;

private:
    std::vector<Residue> image_;
};

struct HuffmanParams {
    std::uint64_t p = 0, q = 0;
    Residue a = 0;  // order p - 1 in Z_pq^*, a = 1 (mod q)
    Residue b = 0;  // a^s
    std::uint64_t s = 0;        // (p - 1) / q
    std::uint64_t alpha_h = 0;  // least alpha in 1..p with a^alpha = -s (mod p)

    std::uint64_t v() const noexcept { return p * q; }
    friend bool operator==(const HuffmanParams&, const HuffmanParams&) = default;
};

inline HuffmanParams huffman_params(std::uint64_t p, std::uint64_t q) {
    detail::require(is_prime(p) && is_prime(q) && p != q, "p and q must be distinct primes");
    detail::require((p - 1) % q == 0, "q must divide p - 1");
    const Modulus m(p * q);
    HuffmanParams h{p, q, 0, 0, (p - 1) / q, 0};
    for (auto a : units(m)) {
        if (a % q == 1 % q && mult_order(m, Unit(m, a)) == p - 1) {
            h.a = a;
            break;
        }
    }
    detail::require(h.a != 0, "no unit of order p - 1 congruent to 1 mod q");
    h.b = m.pow(h.a, h.s);
    const Modulus mp(p);
    const Residue target = mp.neg(h.s % p);
    for (std::uint64_t alpha = 1; alpha <= p; ++alpha) {
        if (mp.pow(h.a, alpha) == target) {
            h.alpha_h = alpha;
            break;
        }
    }
    detail::require(h.alpha_h != 0, "no alpha with a^alpha = -s (mod p)");
    return h;
}

/// x -> j x.
inline PointPermutation mu(const Modulus& m, Residue j) {
    Unit unit(m, j);
    std::vector<Residue> img(m.value());
    for (Residue x = 0; x < m.value(); ++x) img[x] = m.mul(unit.value(), x);
    return PointPermutation(std::move(img));
}

/// x -> x + t.
inline PointPermutation translation(const Modulus& m, Residue t) {
    std::vector<Residue> img(m.value());
    for (Residue x = 0; x < m.value(); ++x) img[x] = m.add(x, t);
    return PointPermutation(std::move(img));
}

/// x -> x + q on the class x = i (mod q), identity elsewhere.
inline PointPermutation tau_i(const Modulus& m, std::uint64_t q, std::uint64_t i) {
    detail::require(q >= 1 && m.value() % q == 0 && i < q, "tau_i needs q | v and 0 <= i < q");
    std::vector<Residue> img(m.value());
    for (Residue x = 0; x < m.value(); ++x) img[x] = x % q == i ? m.add(x, q) : x;
    return PointPermutation(std::move(img));
}

/// x -> j x on the class x = i (mod q), identity elsewhere; j = 1 (mod q).
inline PointPermutation mu_ij(const Modulus& m, std::uint64_t q, std::uint64_t i, Residue j) {
    detail::require(q >= 1 && m.value() % q == 0 && i < q, "mu_ij needs q | v and 0 <= i < q");
    detail::require(m.is_unit(j), "mu_ij needs a unit multiplier");
    detail::require(j % q == 1 % q, "mu_ij needs j = 1 (mod q)");
    std::vector<Residue> img(m.value());
    for (Residue x = 0; x < m.value(); ++x) img[x] = x % q == i ? m.mul(j, x) : x;
    return PointPermutation(std::move(img));
}

/// nu_k = prod_{c=0}^{q-1} mu_{c, a^alpha b^(-k c)}.
inline PointPermutation nu_k(const HuffmanParams& h, std::uint64_t k) {
    detail::require(k < h.q, "nu_k needs 0 <= k < q");
    const Modulus m(h.v());
    const Residue a_alpha = m.pow(h.a, h.alpha_h);
    const Residue b_inv = inverse(m, h.b);
    auto out = PointPermutation::identity(h.v());
    for (std::uint64_t c = 0; c < h.q; ++c) {
        const Residue j = m.mul(a_alpha, m.pow(b_inv, k * c));
        out = out.then(mu_ij(m, h.q, c, j));
    }
    return out;
}

/// sigma_k = prod_l tau_l^(b^((l+1)k) mod p).
inline PointPermutation tau_product(const HuffmanParams& h, std::uint64_t k) {
    const Modulus m(h.v());
    const Modulus mp(h.p);
    auto out = PointPermutation::identity(h.v());
    for (std::uint64_t l = 0; l < h.q; ++l)
        out = out.then(tau_i(m, h.q, l).power(mp.pow(h.b % h.p, (l + 1) * k)));
    return out;
}

/// Image of configuration c's line set under sigma equals the line set of target.
inline bool maps_onto(const CyclicConfiguration& c, const PointPermutation& sigma, const CyclicConfiguration& target) {
    if (sigma.v() != c.v() || target.v() != c.v() || target.k() != c.k()) return false;
    for (Residue j = 0; j < c.v(); ++j) {
        ResidueSet image;
        for (auto x : c.line(j)) image.push_back(sigma(x));
        std::sort(image.begin(), image.end());
        if (!target.line_index(image)) return false;
    }
    return true;
}

inline bool in_aut(const CyclicConfiguration& c, const PointPermutation& sigma) { return maps_onto(c, sigma, c); }

struct DeltaElement {
    std::uint64_t i = 0, j = 0, k = 0;
    PointPermutation perm;
};

struct DeltaSet {
    HuffmanParams params;
    std::uint64_t beta = 0;
    std::vector<std::uint64_t> admitted_k;  // k with sigma_k in Aut(X)
    std::vector<DeltaElement> elements;
};

/// Builds the solving set for X; needs mu_b in Aut(X) and tau_0 not in Aut(X).
inline DeltaSet delta(const CyclicConfiguration& c, const HuffmanParams& h) {
    detail::require(c.v() == h.v(), "configuration order must be p q");
    const Modulus m(h.v());
    if (!in_aut(c, mu(m, h.b))) throw hypothesis_violation("delta: mu_b is not an automorphism");
    if (in_aut(c, tau_i(m, h.q, 0))) throw hypothesis_violation("delta: tau_0 is an automorphism");

    DeltaSet out{h, 0, {}, {}};
    const auto mu_a = mu(m, h.a);
    auto power = mu_a;
    for (std::uint64_t e = 1; e <= h.p - 1; ++e, power = power.then(mu_a)) {
        if (in_aut(c, power)) {
            out.beta = e;
            break;
        }
    }
    for (std::uint64_t k = 0; k < h.q; ++k)
        if (in_aut(c, tau_product(h, k))) out.admitted_k.push_back(k);

    auto mu_a_i = PointPermutation::identity(h.v());
    for (std::uint64_t i = 0; i < out.beta; ++i, mu_a_i = mu_a_i.then(mu_a)) {
        for (std::uint64_t j = 1; j <= h.q - 1; ++j) {
            // j < q < p, so j is always a unit modulo pq.
            const auto mu_j_inv = mu(m, inverse(m, j));
            for (auto k : out.admitted_k)
                out.elements.push_back({i, j, k, mu_a_i.then(nu_k(h, k)).then(mu_j_inv)});
        }
    }
    return out;
}

/// Finds p > q with v = p q and q | p - 1.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> pq_split(std::uint64_t v) {
    const auto f = Modulus(v).factors();
    if (f.size() != 2 || f[0].exponent != 1 || f[1].exponent != 1) return std::nullopt;
    const auto q = f[0].prime, p = f[1].prime;
    if ((p - 1) % q != 0) return std::nullopt;
    return std::pair{p, q};
}

enum class SolveRoute {
    delegated,         // v is not p q with q | p - 1: multipliers suffice
    multipliers,       // mu_b not in Aut(C1): Z_v^* is a solving set
    delta_set,         // multiplier sweep plus the Delta set
    hypothesis_failed  // Delta hypotheses failed; multiplier sweep only
};

struct SolveResult {
    std::optional<IsoWitness> witness;
    SolveRoute route = SolveRoute::delegated;
    std::optional<DeltaSet> delta;
};

inline SolveResult solve_iso_pq(const CyclicConfiguration& c1, const CyclicConfiguration& c2) {
    detail::require(c1.v() == c2.v(), "configurations must share v");
    SolveResult out;
    auto sweep = [&]() -> std::optional<IsoWitness> {
        if (auto w = multiplier_equivalent(c1, c2)) return IsoWitness{*w};
        return std::nullopt;
    };
    const auto split = pq_split(c1.v());
    if (!split || c1.k() != c2.k()) {
        out.witness = sweep();
        return out;
    }
    const auto h = huffman_params(split->first, split->second);
    const Modulus m(c1.v());
    if (!in_aut(c1, mu(m, h.b))) {
        out.route = SolveRoute::multipliers;
        out.witness = sweep();
        return out;
    }
    try {
        out.delta = delta(c1, h);
    } catch (const hypothesis_violation&) {
        out.route = SolveRoute::hypothesis_failed;
        out.witness = sweep();
        return out;
    }
    out.route = SolveRoute::delta_set;
    out.witness = sweep();
    if (out.witness) return out;
    for (const auto& e : out.delta->elements) {
        if (!maps_onto(c1, e.perm, c2)) continue;
        ExplicitWitness w{e.perm.image(), std::vector<Residue>(c1.v())};
        for (Residue j = 0; j < c1.v(); ++j) {
            ResidueSet image;
            for (auto x : c1.line(j)) image.push_back(e.perm(x));
            std::sort(image.begin(), image.end());
            w.lines[j] = *c2.line_index(image);
        }
        out.witness = w;
        return out;
    }
    return out;
}

/// Distinct cyclic subgroups of `group` generated by a single v-cycle on the
/// points, each as a sorted list of its elements.
inline std::vector<std::vector<PointPermutation>> regular_cyclic_subgroups(
    const std::vector<PointPermutation>& group) {
    std::set<std::vector<PointPermutation>> found;
    for (const auto& g : group) {
        const auto v = g.v();
        Residue x = g(0);
        std::uint64_t cycle = 1;
        while (x != 0) {
            x = g(x);
            ++cycle;
        }
        if (cycle != v) continue;
        std::vector<PointPermutation> sub;
        auto cur = PointPermutation::identity(v);
        for (std::uint64_t e = 0; e < v; ++e, cur = cur.then(g)) sub.push_back(cur);
        std::sort(sub.begin(), sub.end());
        found.insert(std::move(sub));
    }
    return {found.begin(), found.end()};
}

/// True iff all the given subgroups are conjugate inside `group`.
inline bool all_conjugate(const std::vector<PointPermutation>& group,
                          const std::vector<std::vector<PointPermutation>>& subgroups) {
    if (subgroups.size() <= 1) return true;
    std::set<std::vector<PointPermutation>> conjugates;
    for (const auto& h : group) {
        const auto h_inv = h.inverse();
        std::vector<PointPermutation> conj;
        for (const auto& c : subgroups.front()) conj.push_back(h_inv.then(c).then(h));
        std::sort(conj.begin(), conj.end());
        conjugates.insert(std::move(conj));
    }
    return std::all_of(subgroups.begin(), subgroups.end(),
                       [&](const auto& s) { return conjugates.count(s) > 0; });
}

}  // namespace cyclconf
