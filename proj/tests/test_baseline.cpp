#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cyclconf/baseline.hpp"
#include "test_support.hpp"

using namespace cyclconf;

using oracle::for_each_subset;
using oracle::generates;
using oracle::orbit_minimum;
using oracle::sidon;

TEST(DifferenceSet, Examples) {
    const Modulus m(7);
    EXPECT_EQ(difference_set({0}, m), (ResidueSet{0}));
    EXPECT_EQ(difference_set({0, 1, 3}, m).size(), 7U);
    EXPECT_EQ(difference_set({0, 1, 2}, m), (ResidueSet{0, 1, 2, 5, 6}));
}

TEST(IsBaseLine, Examples) {
    EXPECT_TRUE(is_base_line({0, 1, 3}, Modulus(7), 3));
    EXPECT_TRUE(is_base_line({0, 1, 3}, Modulus(8), 3));
    EXPECT_FALSE(is_base_line({0, 3, 6}, Modulus(9), 3));
    EXPECT_FALSE(is_base_line({0, 1, 3}, Modulus(7), 4));
    EXPECT_THROW(is_base_line({0, 1}, Modulus(7), 2), std::invalid_argument);
}

TEST(IsBaseLine, BaseLinesAvoidCosets) {
    for (std::uint64_t v = 7; v <= 30; ++v) {
        const Modulus m(v);
        for_each_subset(v, 3, [&](const std::vector<Residue>& s) {
            if (is_base_line(s, m, 3)) {
                EXPECT_FALSE(contains_coset(s, m)) << format_residues(s) << " mod " << v;
            }
        });
    }
}

TEST(IsConnected, Examples) {
    EXPECT_TRUE(is_connected(BaseLine(8, {0, 1, 3})));
    EXPECT_FALSE(is_connected(BaseLine(14, {0, 2, 6})));
    EXPECT_TRUE(is_connected(BaseLine(7, {0, 1, 3})));
}

TEST(ContainsCoset, Examples) {
    EXPECT_TRUE(contains_coset({0, 3, 6}, Modulus(9)));
    EXPECT_FALSE(contains_coset({0, 1, 3}, Modulus(8)));
    // {1, 9} is a coset of the order-2 subgroup {0, 8}.
    EXPECT_TRUE(contains_coset({0, 1, 2, 9}, Modulus(16)));
    EXPECT_FALSE(is_base_line({0, 1, 2, 9}, Modulus(16), 4));
}

TEST(BaseLine, RejectsInvalid) {
    EXPECT_THROW(BaseLine(7, {0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(BaseLine(7, {0, 7, 3}), std::invalid_argument);
    EXPECT_THROW(BaseLine(7, {0, 1}), std::invalid_argument);
    EXPECT_EQ(BaseLine(7, {3, 1, 0}).elements(), (ResidueSet{0, 1, 3}));
}

TEST(Enumerate, Examples) {
    EXPECT_TRUE(enumerate_base_lines(Modulus(6), 3, true).empty());
    const auto fano = enumerate_base_lines(Modulus(7), 3, true);
    ASSERT_FALSE(fano.empty());
    for (const auto& b : fano) EXPECT_EQ(canonical_form(b).elements(), (ResidueSet{0, 1, 3}));
    EXPECT_EQ(orbit_representatives(Modulus(13), 3, true).size(), 2U);
}

TEST(Enumerate, MatchesSubsetScan) {
    for (std::size_t k : {3U, 4U}) {
        for (std::uint64_t v = 5; v <= (k == 3 ? 40U : 24U); ++v) {
            const Modulus m(v);
            for (bool connected : {false, true}) {
                std::vector<ResidueSet> all, slice;
                for_each_subset(v, k, [&](const std::vector<Residue>& s) {
                    if (!sidon(s, v) || (connected && !generates(s, v))) return;
                    all.push_back(s);
                    if (s[0] == 0) slice.push_back(s);
                });
                std::vector<ResidueSet> got_slice, got_all;
                for (const auto& b : enumerate_base_lines(m, k, connected)) got_slice.push_back(b.elements());
                for (const auto& b : all_base_lines(m, k, connected, 300)) got_all.push_back(b.elements());
                EXPECT_EQ(got_slice, slice) << "v=" << v << " k=" << k;
                EXPECT_EQ(got_all, all) << "v=" << v << " k=" << k;
            }
        }
    }
}

TEST(Enumerate, RespectsCap) {
    EXPECT_THROW(enumerate_base_lines(Modulus(301), 3, true), limit_exceeded);
    EXPECT_THROW(enumerate_base_lines(Modulus(100), 3, true, 50), limit_exceeded);
    EXPECT_THROW(enumerate_base_lines(Modulus(7), 2, true), std::invalid_argument);
}

TEST(CanonicalForm, Examples) {
    EXPECT_EQ(canonical_form(BaseLine(7, {0, 2, 6})).elements(), (ResidueSet{0, 1, 3}));
    EXPECT_EQ(canonical_form(BaseLine(8, {0, 1, 3})).elements(), (ResidueSet{0, 1, 3}));
    EXPECT_EQ(canonical_form(BaseLine(8, {0, 5, 7})).elements(), (ResidueSet{0, 1, 3}));
}

TEST(CanonicalForm, MatchesFullOrbitScan) {
    for (std::uint64_t v = 7; v <= 40; ++v)
        for (const auto& b : enumerate_base_lines(Modulus(v), 3, false))
            EXPECT_EQ(canonical_form(b).elements(), orbit_minimum(b.elements(), v)) << b;
    for (std::uint64_t v = 13; v <= 24; ++v)
        for (const auto& b : enumerate_base_lines(Modulus(v), 4, false))
            EXPECT_EQ(canonical_form(b).elements(), orbit_minimum(b.elements(), v)) << b;
}

TEST(OrbitRepresentatives, PartitionAllBaseLines) {
    for (std::uint64_t v = 7; v <= 40; ++v) {
        const Modulus m(v);
        const auto reps = orbit_representatives(m, 3, false);
        std::size_t covered = 0;
        std::set<ResidueSet> reps_set;
        for (const auto& r : reps) {
            EXPECT_EQ(canonical_form(r), r);
            reps_set.insert(r.elements());
            covered += affine_orbit(r).size();
        }
        EXPECT_EQ(covered, all_base_lines(m, 3, false, 300).size()) << v;
        for (const auto& b : enumerate_base_lines(m, 3, false))
            EXPECT_TRUE(reps_set.count(canonical_form(b).elements())) << b;
    }
}

TEST(AffineOrbit, ClosedUnderMaps) {
    const BaseLine b(13, {0, 1, 4});
    const auto orbit = affine_orbit(b);
    EXPECT_EQ(orbit.size(), 52U);
    const Modulus m(13);
    for (const auto& s : orbit) EXPECT_TRUE(std::binary_search(orbit.begin(), orbit.end(), AffineMap{2, 5}.apply(m, s)));
}
