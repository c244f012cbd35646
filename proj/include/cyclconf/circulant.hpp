// circulant.hpp
// (0,1) circulant matrices identified by the support of row 0.
//
// Convention: row j is the characteristic vector of S_A + j, so entry
// (j, i) is 1 iff i - j lies in S_A. With S_A a base line this is the
// line-point incidence matrix of the cyclic configuration (rows are lines,
// columns are points).

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "baseline.hpp"
#include "bipartite_iso.hpp"
#include "errors.hpp"
#include "residue_ring.hpp"

namespace cyclconf {

using BigInt = boost::multiprecision::cpp_int;

class CirculantMatrix {
public:
    CirculantMatrix(const Modulus& m, std::vector<Residue> support)
        : modulus_(m), support_(normalize_set(m, std::move(support))) {}

    const Modulus& modulus() const noexcept { return modulus_; }
    std::uint64_t v() const noexcept { return modulus_.value(); }
    const ResidueSet& support() const noexcept { return support_; }
    std::size_t weight() const noexcept { return support_.size(); }

    bool entry(Residue row, Residue col) const {
        return std::binary_search(support_.begin(), support_.end(), modulus_.sub(col, row));
    }

    std::string row_string(Residue row) const {
        std::string s(v(), '0');
        for (auto x : support_) s[modulus_.add(x, row)] = '1';
        return s;
    }

    friend bool operator==(const CirculantMatrix& a, const CirculantMatrix& b) {
        return a.v() == b.v() && a.support_ == b.support_;
    }

private:
    Modulus modulus_;
    ResidueSet support_;
};

/// c[d] = |S_A ∩ (S_A + d)|; A A^T is the circulant with row 0 equal to c.
struct GramProfile {
    std::vector<std::uint64_t> c;
};

inline GramProfile gram_profile(const CirculantMatrix& a) {
    const auto& m = a.modulus();
    const auto& s = a.support();
    GramProfile g{std::vector<std::uint64_t>(a.v(), 0)};
    for (auto x : s)
        for (auto y : s) ++g.c[m.sub(x, y)];
    return g;
}

/// Dense A A^T: entry (i, j) counts common points of rows i and j.
inline std::vector<std::vector<std::int64_t>> gram_matrix(const CirculantMatrix& a) {
    const auto g = gram_profile(a);
    const auto& m = a.modulus();
    std::vector<std::vector<std::int64_t>> out(a.v(), std::vector<std::int64_t>(a.v()));
    for (Residue i = 0; i < a.v(); ++i)
        for (Residue j = 0; j < a.v(); ++j) out[i][j] = static_cast<std::int64_t>(g.c[m.sub(j, i)]);
    return out;
}

/// Coefficients of det(xI - M), highest degree first, by the division-free
/// Samuelson-Berkowitz recurrence over exact integers.
inline std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& mat) {
    const std::size_t n = mat.size();
    if (n == 0) return {BigInt(1)};
    std::vector<BigInt> poly{BigInt(1), BigInt(-mat[n - 1][n - 1])};
    for (std::size_t s = n - 1; s-- > 0;) {
        const std::size_t m = n - s;  // size of the current leading block
        std::vector<BigInt> first_col{BigInt(1), BigInt(-mat[s][s])};
        // power holds A1^t C for the trailing block A1 and column C.
        std::vector<BigInt> power(m - 1);
        for (std::size_t i = 0; i < m - 1; ++i) power[i] = mat[s + 1 + i][s];
        for (std::size_t t = 0; t + 1 < m; ++t) {
            BigInt rc = 0;
            for (std::size_t i = 0; i < m - 1; ++i) rc += mat[s][s + 1 + i] * power[i];
            first_col.push_back(-rc);
            if (t + 2 < m) {
                std::vector<BigInt> next(m - 1);
                for (std::size_t i = 0; i < m - 1; ++i)
                    for (std::size_t j = 0; j < m - 1; ++j)
                        next[i] += mat[s + 1 + i][s + 1 + j] * power[j];
                power = std::move(next);
            }
        }
        std::vector<BigInt> next_poly(m + 1);
        for (std::size_t i = 0; i <= m; ++i)
            for (std::size_t j = 0; j <= std::min(i, m - 1); ++j) next_poly[i] += first_col[i - j] * poly[j];
        poly = std::move(next_poly);
    }
    return poly;
}

/// Similarity of the Gram matrices A1 A1^T and A2 A2^T. Both are real
/// symmetric, hence diagonalizable, so equal characteristic polynomials
/// decide it.
inline bool gram_similar(const CirculantMatrix& a1, const CirculantMatrix& a2) {
    detail::require(a1.v() == a2.v(), "gram_similar needs matrices of the same order");
    if (a1 == a2) return true;
    return characteristic_polynomial(gram_matrix(a1)) == characteristic_polynomial(gram_matrix(a2));
}

/// Bipartite graph of a circulant: vertices 0..v-1 are columns (points),
/// v..2v-1 are rows (lines); column i ~ row j iff entry (j, i) is 1.
inline ColoredGraph support_graph(const CirculantMatrix& a) {
    const auto v = a.v();
    ColoredGraph g;
    g.adjacency.assign(2 * v, {});
    g.color.assign(2 * v, 0);
    for (Residue j = 0; j < v; ++j) {
        g.color[v + j] = 1;
        for (auto s : a.support()) {
            const auto i = a.modulus().add(s, j);
            g.adjacency[i].push_back(v + j);
            g.adjacency[v + j].push_back(i);
        }
    }
    return g;
}

/// Row and column permutations with A1(i, j) = A2(rows[i], cols[j]).
struct PaqWitness {
    std::vector<Residue> rows;
    std::vector<Residue> cols;
};

inline bool verify_paq(const CirculantMatrix& a1, const CirculantMatrix& a2, const PaqWitness& w) {
    const auto v = a1.v();
    if (a2.v() != v || w.rows.size() != v || w.cols.size() != v) return false;
    auto is_perm = [v](std::vector<Residue> p) {
        std::sort(p.begin(), p.end());
        for (Residue i = 0; i < v; ++i)
            if (p[i] != i) return false;
        return true;
    };
    if (!is_perm(w.rows) || !is_perm(w.cols)) return false;
    for (Residue i = 0; i < v; ++i)
        for (Residue j = 0; j < v; ++j)
            if (a1.entry(i, j) != a2.entry(w.rows[i], w.cols[j])) return false;
    return true;
}

/// Decides A1 = P A2 Q by color-preserving isomorphism of the support graphs.
inline std::optional<PaqWitness> paq_equivalent(const CirculantMatrix& a1, const CirculantMatrix& a2,
                                                std::uint64_t cap = kEnumerationLimit) {
    detail::require(a1.v() == a2.v(), "paq_equivalent needs matrices of the same order");
    detail::enforce_cap(a1.v(), cap, "paq_equivalent");
    const auto v = a1.v();
    if (a1.weight() != a2.weight()) return std::nullopt;
    if (a1 == a2) {
        PaqWitness id{std::vector<Residue>(v), std::vector<Residue>(v)};
        std::iota(id.rows.begin(), id.rows.end(), Residue{0});
        std::iota(id.cols.begin(), id.cols.end(), Residue{0});
        return id;
    }
    // Translations act transitively on the columns of A2, so column 0 may be
    // pinned to column 0.
    const auto map = find_isomorphism(support_graph(a1), support_graph(a2), {{0, 0}});
    if (!map) return std::nullopt;
    PaqWitness w{std::vector<Residue>(v), std::vector<Residue>(v)};
    for (Residue i = 0; i < v; ++i) {
        w.cols[i] = (*map)[i];
        w.rows[i] = (*map)[v + i] - v;
    }
    return w;
}

/// Parameters of the weight-4 exceptional family:
/// a1 S1 + b1 = {0, x, y, y+u} and a2 S2 + b2 = {0, x+u, y, y+u}, v = 2u.
/// When `swapped` is set the roles of S1 and S2 are exchanged.
struct KkWitness {
    Residue u, x, y;
    AffineMap first, second;
    bool swapped = false;

    friend bool operator==(const KkWitness&, const KkWitness&) = default;
};

namespace detail {

inline bool kk_admissible(const Modulus& m, Residue x, Residue y) {
    const Residue u = m.value() / 2;
    if (x == 0 || x % 2 != 0 || u % (2 * x) != 0) return false;
    if (std::gcd(std::gcd(x, y), m.value()) != 1) return false;
    const Residue period = u / x;
    return (x / 2) % period != (y + u / (2 * x)) % period;
}

// Least (a, b) in lexicographic order with aS + b = target.
inline std::optional<AffineMap> affine_to(const Modulus& m, const ResidueSet& s, const ResidueSet& target,
                                          const std::vector<Residue>& unit_list) {
    for (auto a : unit_list)
        for (Residue b = 0; b < m.value(); ++b)
            if (AffineMap{a, b}.apply(m, s) == target) return AffineMap{a, b};
    return std::nullopt;
}

inline std::optional<KkWitness> kk_search(const Modulus& m, const ResidueSet& s1, const ResidueSet& s2,
                                          const std::vector<Residue>& unit_list) {
    const Residue u = m.value() / 2;
    std::optional<KkWitness> best;
    auto better = [](const KkWitness& a, const KkWitness& b) {
        return std::tie(a.x, a.y, a.first, a.second) < std::tie(b.x, b.y, b.first, b.second);
    };
    for (auto a : unit_list) {
        for (Residue b = 0; b < m.value(); ++b) {
            const AffineMap f{a, b};
            const auto t = f.apply(m, s1);
            if (t.front() != 0) continue;
            for (auto x : t) {
                for (auto y : t) {
                    if (x == 0 || y == 0 || y == x) continue;
                    const Residue yu = m.add(y, u);
                    if (yu == 0 || yu == x || !std::binary_search(t.begin(), t.end(), yu)) continue;
                    if (!kk_admissible(m, x, y)) continue;
                    if (best && std::tie(best->x, best->y) < std::tie(x, y)) continue;
                    auto target = normalize_set(m, {0, m.add(x, u), y, yu});
                    if (target.size() != 4) continue;
                    const auto g = affine_to(m, s2, target, unit_list);
                    if (!g) continue;
                    KkWitness w{u, x, y, f, *g, false};
                    if (!best || better(w, *best)) best = w;
                }
            }
        }
    }
    return best;
}

}  // namespace detail

/// Searches for the weight-4 exceptional PAQ-equivalence parameters. Both
/// supports must have weight 4 and generate Z_v by their differences.
inline std::optional<KkWitness> kk_exceptional(const Modulus& m, const ResidueSet& s1, const ResidueSet& s2) {
    const auto a = normalize_set(m, s1);
    const auto b = normalize_set(m, s2);
    detail::require(a.size() == 4 && b.size() == 4, "kk_exceptional needs weight-4 supports");
    detail::require(is_connected(a, m) && is_connected(b, m), "kk_exceptional needs <S - S> = Z_v");
    if (m.value() % 2 != 0) return std::nullopt;
    detail::enforce_cap(m.value(), kEnumerationLimit, "kk_exceptional");
    const auto unit_list = units(m);
    if (auto w = detail::kk_search(m, a, b, unit_list)) return w;
    if (auto w = detail::kk_search(m, b, a, unit_list)) {
        w->swapped = true;
        return w;
    }
    return std::nullopt;
}

}  // namespace cyclconf
