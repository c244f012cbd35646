// acceptance.cpp
// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// integer or set equality (tolerance 0). Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclconf/cyclconf.hpp"
#include "test_support.hpp"

using namespace cyclconf;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

// 1. formula = sum on 7..300; both = orbit count on 7..200; spot values.
Result triple_agreement() {
    Result r;
    std::size_t checked = 0;
    for (std::uint64_t v = 7; v <= 300; ++v) {
        const auto f = count_formula(v);
        const auto s = count_sum(v);
        if (f != s) r.fail("v=" + std::to_string(v) + " formula " + std::to_string(f) + " sum " + std::to_string(s));
        if (v <= 200) {
            const auto o = count_orbits(v, 3, 300);
            if (o != f) r.fail("v=" + std::to_string(v) + " orbits " + std::to_string(o) + " formula " + std::to_string(f));
        }
        ++checked;
    }
    const std::vector<std::pair<std::uint64_t, std::int64_t>> spots{{7, 1}, {8, 1}, {9, 1}, {13, 2}, {15, 4}};
    for (auto [v, expected] : spots)
        if (count_orbits(v, 3, 300) != expected || count_formula(v) != expected) r.fail("spot v=" + std::to_string(v));
    if (r.pass) r.detail = std::to_string(checked) + " values, 5 spot values";
    return r;
}

// 2. sum_l N(v,3,l) = 3 phi(v) #orbits for 7 <= v <= 100.
Result burnside() {
    Result r;
    for (std::uint64_t v = 7; v <= 100; ++v) {
        std::int64_t total = 0;
        for (auto l : units(Modulus(v))) total += n_vkl_bruteforce(v, 3, l, 300);
        const auto rhs = 3 * static_cast<std::int64_t>(phi(v)) * count_orbits(v, 3, 300);
        if (total != rhs) r.fail("v=" + std::to_string(v) + " " + std::to_string(total) + " != " + std::to_string(rhs));
    }
    if (r.pass) r.detail = "94 values";
    return r;
}

// 3. Closed per-unit counts equal brute force for every unit, 7 <= v <= 100.
Result closed_per_unit() {
    Result r;
    std::size_t pairs = 0;
    for (std::uint64_t v = 7; v <= 100; ++v) {
        for (auto l : units(Modulus(v))) {
            const auto brute = n_vkl_bruteforce(v, 3, l, 300);
            const auto closed = l == 1 ? n_v3_1(v) : n_v3_l(v, l);
            if (brute != closed)
                r.fail("v=" + std::to_string(v) + " l=" + std::to_string(l) + " closed " + std::to_string(closed) +
                       " brute " + std::to_string(brute));
            ++pairs;
        }
    }
    const std::vector<std::int64_t> expected7{6, 6, 0, 6, 0, 0};  // l = 1..6
    std::int64_t total7 = 0;
    for (Residue l = 1; l <= 6; ++l) {
        const auto n = n_vkl_bruteforce(7, 3, l, 300);
        total7 += n;
        if (n != expected7[l - 1]) r.fail("N(7,3," + std::to_string(l) + ")=" + std::to_string(n));
    }
    if (total7 != 18) r.fail("v=7 total " + std::to_string(total7));
    if (r.pass) r.detail = std::to_string(pairs) + " (v,l) pairs; v=7 total 18";
    return r;
}

// Both relations are AGL_1(v)-invariant, so agreement on the translation
// slice is agreement on all of B_con(v,k). With all_pairs every slice pair is
// compared directly in addition to the partition check.
Result partition_check(std::size_t k, const std::vector<std::uint64_t>& values, bool all_pairs = false) {
    Result r;
    std::size_t classes = 0, members = 0, pairs = 0, slice_pairs = 0;
    for (auto v : values) {
        if (all_pairs) {
            std::vector<CyclicConfiguration> slice;
            for (const auto& b : enumerate_base_lines(Modulus(v), k, true)) slice.emplace_back(b);
            for (std::size_t i = 0; i < slice.size(); ++i)
                for (std::size_t j = i + 1; j < slice.size(); ++j) {
                    ++slice_pairs;
                    const auto mult = multiplier_equivalent(slice[i], slice[j]);
                    const auto exact = exact_isomorphic(slice[i], slice[j]);
                    if (mult.has_value() != exact.has_value())
                        r.fail("v=" + std::to_string(v) + " pair " + format_residues(slice[i].base().elements()) + " / " +
                               format_residues(slice[j].base().elements()));
                    if (exact && !verify_witness(slice[i], slice[j], *exact)) r.fail("exact witness replay failed");
                }
        }
        const auto pc = compare_iso_partitions(Modulus(v), k, kEnumerationLimit);
        classes += pc.classes;
        members += pc.members_checked;
        pairs += pc.pairs_checked;
        if (pc.mismatches != 0)
            r.fail("v=" + std::to_string(v) + " " + std::to_string(pc.mismatches) + " mismatches" +
                   (pc.details.empty() ? "" : ": " + pc.details.front()));
    }
    std::ostringstream os;
    os << classes << " classes, " << members << " members vs representative, " << pairs << " representative pairs";
    if (all_pairs) os << ", " << slice_pairs << " slice pairs";
    if (r.pass) r.detail = os.str();
    return r;
}

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

// 6. The weight-4 exceptional pair at v = 16.
Result kk_family() {
    Result r;
    const Modulus m(16);
    const ResidueSet s1{0, 1, 2, 9}, s2{0, 1, 9, 10};
    const CirculantMatrix a1(m, s1), a2(m, s2);
    const auto paq = paq_equivalent(a1, a2);
    if (!paq || !verify_paq(a1, a2, *paq)) r.fail("no verified PAQ witness");
    if (multiplier_equivalent(m, s1, s2)) r.fail("multiplier witness found");
    for (std::uint64_t a = 1; a < 16; a += 2)
        for (std::uint64_t b = 0; b < 16; ++b)
            if (oracle::affine_image(s1, a, b, 16) == s2) r.fail("scan found multiplier a=" + std::to_string(a));
    if (is_base_line(s1, m, 4) || is_base_line(s2, m, 4)) r.fail("a support is a base line");
    if (oracle::sidon(s1, 16) || oracle::sidon(s2, 16)) r.fail("a support has distinct differences");
    const auto kk = kk_exceptional(m, s1, s2);
    if (!kk) {
        r.fail("kk_exceptional found nothing");
    } else {
        const auto u = kk->u, x = kk->x, y = kk->y;
        if (u != 8 || x != 2 || y != 1) r.fail("parameters differ from u=8 x=2 y=1");
        const bool conditions = x % 2 == 0 && u % (2 * x) == 0 && (x / 2) % (u / x) != (y + u / (2 * x)) % (u / x);
        if (!conditions) r.fail("parameter conditions fail");
        if (kk->swapped || kk->first.apply(m, s1) != normalize_set(m, {0, x, y, y + u}) ||
            kk->second.apply(m, s2) != normalize_set(m, {0, x + u, y, y + u}))
            r.fail("normalizations do not reproduce the family");
    }
    if (r.pass) r.detail = "PAQ witness verified, no multiplier in 8*16 maps, u=8 x=2 y=1";
    return r;
}

// 8. solve_iso_pq vs the exact oracle on all pairs of the translation slice at v = 21.
Result solving_sets_21() {
    Result r;
    const Modulus m(21);
    const auto h = huffman_params(7, 3);
    std::size_t pairs = 0, deltas = 0, perms = 0;
    for (std::size_t k : {3U, 4U}) {
        std::vector<CyclicConfiguration> slice;
        for (const auto& b : enumerate_base_lines(m, k, true)) slice.emplace_back(b);
        for (const auto& c1 : slice) {
            if (in_aut(c1, mu(m, h.b))) {
                const auto d = delta(c1, h);
                ++deltas;
                for (const auto& e : d.elements) {
                    ++perms;
                    if (!e.perm.is_bijective()) r.fail("Delta element not bijective");
                    if (!in_aut(c1, tau_product(h, e.k))) r.fail("admitted k fails automorphism replay");
                }
                if (!in_aut(c1, mu(m, h.a).power(d.beta))) r.fail("mu_a^beta not an automorphism");
            }
            for (const auto& c2 : slice) {
                ++pairs;
                const auto s = solve_iso_pq(c1, c2);
                const auto e = exact_isomorphic(c1, c2);
                if (s.witness.has_value() != e.has_value()) r.fail("disagreement on " + format_residues(c1.base().elements()) +
                                                                   " vs " + format_residues(c2.base().elements()));
                if (s.witness && !verify_witness(c1, c2, *s.witness)) r.fail("witness replay failed");
            }
        }
    }
    std::ostringstream os;
    os << pairs << " ordered pairs, " << deltas << " Delta sets, " << perms << " Delta permutations";
    if (r.pass) r.detail = os.str();
    return r;
}

// 9. Incidence and Levi text round trips.
Result round_trips() {
    Result r;
    std::size_t n = 0;
    for (std::size_t k : {3U, 4U}) {
        for (std::uint64_t v = 7; v <= (k == 3 ? 60U : 30U); ++v) {
            for (const auto& b : enumerate_base_lines(Modulus(v), k, false)) {
                const CyclicConfiguration c(b);
                const auto a = incidence_matrix(c);
                if (a.support() != b.elements()) r.fail("support differs");
                if (configuration_from(parse_incidence_text(to_incidence_text(a))).base() != b) r.fail("incidence round trip");
                const auto g = levi_graph(c);
                const auto parsed = parse_levi_text(to_levi_text(g));
                if (!(parsed == g)) r.fail("levi round trip");
                VertexMap identity(2 * v);
                for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
                const auto g1 = g.colored(), g2 = parsed.colored();
                for (std::size_t i = 0; i < identity.size(); ++i)
                    if (g1.adjacency[i] != g2.adjacency[i] || g1.color[i] != g2.color[i]) r.fail("identity is not an isomorphism");
                ++n;
            }
        }
    }
    if (r.pass) r.detail = std::to_string(n) + " configurations";
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"triple agreement formula/sum/orbits", triple_agreement},
        {"Burnside identity", burnside},
        {"closed per-unit counts vs brute force", closed_per_unit},
        {"k=3 orbit partition = isomorphism partition, v<=30", [] { return partition_check(3, range(7, 30), true); }},
        {"k=4 orbit partition = isomorphism partition, v<=20", [] { return partition_check(4, range(7, 20), true); }},
        {"weight-4 exceptional PAQ pair at v=16", kk_family},
        {"exact <=> multiplier at v in {9,15,21,25,27,33,35,49}, k=3,4",
         [] {
             const std::vector<std::uint64_t> vs{9, 15, 21, 25, 27, 33, 35, 49};
             auto a = partition_check(3, vs);
             auto b = partition_check(4, vs);
             if (!b.pass) return b;
             if (a.pass) a.detail = "k=3: " + a.detail + "; k=4: " + b.detail;
             return a;
         }},
        {"solving sets vs exact at v=21", solving_sets_21},
        {"format round trips", round_trips},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %zu %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    r.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !r.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
