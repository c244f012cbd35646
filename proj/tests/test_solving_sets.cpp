#include <gtest/gtest.h>

#include "cyclconf/iso_dispatch.hpp"
#include "cyclconf/solving_sets.hpp"

using namespace cyclconf;

namespace {

PointPermutation perm(std::vector<Residue> image) { return PointPermutation(std::move(image)); }

}  // namespace

TEST(PointPermutation, Composition) {
    const auto p = perm({1, 2, 0});
    const auto q = perm({0, 2, 1});
    // then: apply p first.
    EXPECT_EQ(p.then(q).image(), (std::vector<Residue>{2, 1, 0}));
    EXPECT_EQ(p.then(p.inverse()), PointPermutation::identity(3));
    EXPECT_EQ(p.power(3), PointPermutation::identity(3));
    EXPECT_FALSE(perm({0, 0, 1}).is_bijective());
}

TEST(HuffmanParams, Examples) {
    const auto h = huffman_params(7, 3);
    EXPECT_EQ(h.a, 10U);
    EXPECT_EQ(h.b, 16U);
    EXPECT_EQ(h.s, 2U);
    EXPECT_EQ(h.alpha_h, 5U);
    const auto small = huffman_params(3, 2);
    EXPECT_EQ(small.a, 5U);
    EXPECT_EQ(small.b, 5U);
    EXPECT_EQ(small.s, 1U);
    EXPECT_THROW(huffman_params(5, 3), std::invalid_argument);
}

TEST(HuffmanParams, DefiningProperties) {
    for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 3}, {11, 5}, {13, 3}, {31, 5}, {43, 7}}) {
        const auto h = huffman_params(p, q);
        const Modulus m(p * q);
        EXPECT_EQ(mult_order(m, Unit(m, h.a)), p - 1);
        EXPECT_EQ(h.a % q, 1U);
        EXPECT_EQ(h.b, m.pow(h.a, h.s));
        EXPECT_EQ(Modulus(p).pow(h.a, h.alpha_h), Modulus(p).neg(h.s));
    }
}

TEST(Tau, Examples) {
    const Modulus m(21);
    const auto t0 = tau_i(m, 3, 0);
    EXPECT_EQ(t0(0), 3U);
    EXPECT_EQ(t0(3), 6U);
    EXPECT_EQ(t0(1), 1U);
    EXPECT_EQ(t0.power(7), PointPermutation::identity(21));
    EXPECT_EQ(tau_i(m, 3, 0).then(tau_i(m, 3, 1)).then(tau_i(m, 3, 2)), translation(m, 3));
}

TEST(MuIJ, Examples) {
    const Modulus m(21);
    const auto g = mu_ij(m, 3, 0, 16);
    EXPECT_EQ(g(0), 0U);
    EXPECT_EQ(g(3), 6U);
    EXPECT_EQ(g(9), 18U);
    EXPECT_EQ(g(1), 1U);
    EXPECT_EQ(mu_ij(m, 3, 1, 1), PointPermutation::identity(21));
    EXPECT_EQ(mu_ij(m, 3, 0, 4).then(mu_ij(m, 3, 1, 4)).then(mu_ij(m, 3, 2, 4)), mu(m, 4));
    EXPECT_THROW(mu_ij(m, 3, 0, 2), std::invalid_argument);
}

TEST(Nu, Examples) {
    const auto h = huffman_params(7, 3);
    const Modulus m(21);
    EXPECT_EQ(nu_k(h, 0), mu(m, m.pow(h.a, h.alpha_h)));
    for (std::uint64_t k = 0; k < 3; ++k) EXPECT_TRUE(nu_k(h, k).is_bijective());
    // Class 0 factor of nu_1 is mu_{0, a^alpha}.
    EXPECT_EQ(nu_k(h, 1)(3), m.mul(m.pow(h.a, h.alpha_h), 3));
    EXPECT_EQ(nu_k(h, 1)(0), 0U);
}

TEST(Delta, AllElementsBijectiveAndReplay) {
    const auto h = huffman_params(7, 3);
    const Modulus m(21);
    std::size_t built = 0;
    for (std::size_t k : {3U, 4U}) {
        for (const auto& b : enumerate_base_lines(m, k, true)) {
            const CyclicConfiguration c(b);
            if (!in_aut(c, mu(m, h.b))) continue;
            EXPECT_FALSE(in_aut(c, tau_i(m, 3, 0)));
            const auto d = delta(c, h);
            ++built;
            EXPECT_GE(d.beta, 1U);
            EXPECT_TRUE(in_aut(c, mu(m, h.a).power(d.beta)));
            ASSERT_FALSE(d.admitted_k.empty());
            EXPECT_EQ(d.admitted_k.front(), 0U);
            for (const auto& e : d.elements) {
                EXPECT_TRUE(e.perm.is_bijective());
                EXPECT_TRUE(in_aut(c, tau_product(h, e.k)));
            }
        }
    }
    EXPECT_GT(built, 0U);
}

TEST(Delta, HypothesisViolation) {
    const auto h = huffman_params(7, 3);
    const Modulus m(21);
    for (const auto& b : enumerate_base_lines(m, 3, true)) {
        const CyclicConfiguration c(b);
        if (!in_aut(c, mu(m, h.b))) {
            EXPECT_THROW(delta(c, h), hypothesis_violation);
            return;
        }
    }
    ADD_FAILURE() << "expected a connected (21_3) without mu_b in its automorphism group";
}

TEST(SolveIsoPq, Examples) {
    const CyclicConfiguration c1(21, {0, 1, 3});
    const auto c2 = CyclicConfiguration(BaseLine(Modulus(21), AffineMap{5, 4}.apply(Modulus(21), {0, 1, 3})));
    const auto r = solve_iso_pq(c1, c2);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify_witness(c1, c2, *r.witness));
    EXPECT_FALSE(solve_iso_pq(CyclicConfiguration(21, {0, 1, 3}), CyclicConfiguration(21, {0, 1, 4})).witness);
    const auto del = solve_iso_pq(CyclicConfiguration(15, {0, 1, 3}), CyclicConfiguration(15, {0, 1, 3}));
    EXPECT_EQ(del.route, SolveRoute::delegated);
    EXPECT_TRUE(del.witness);
    EXPECT_FALSE(pq_split(15));
    EXPECT_EQ(pq_split(21), (std::pair<std::uint64_t, std::uint64_t>{7, 3}));
}

TEST(SolveIsoPq, AgreesWithExactAt39) {
    const Modulus m(39);
    const auto slice = enumerate_base_lines(m, 3, true);
    for (std::size_t i = 0; i < slice.size(); i += 7)
        for (std::size_t j = 0; j < slice.size(); j += 11) {
            const CyclicConfiguration c1(slice[i]), c2(slice[j]);
            const auto r = solve_iso_pq(c1, c2);
            EXPECT_EQ(r.witness.has_value(), exact_isomorphic(c1, c2).has_value());
            if (r.witness) {
                EXPECT_TRUE(verify_witness(c1, c2, *r.witness));
            }
        }
}

// All regular cyclic subgroups of Aut(C) are conjugate exactly when
// multiplier equivalence decides isomorphism for C.
TEST(RegularSubgroups, AllConjugate) {
    for (std::uint64_t v : {7U, 8U, 13U}) {
        for (const auto& b : orbit_representatives(Modulus(v), 3, true)) {
            const CyclicConfiguration c(b);
            std::vector<PointPermutation> group;
            for (auto& g : automorphism_group(c)) group.emplace_back(std::move(g));
            const auto subgroups = regular_cyclic_subgroups(group);
            EXPECT_FALSE(subgroups.empty());
            EXPECT_TRUE(all_conjugate(group, subgroups)) << b;
        }
    }
}
