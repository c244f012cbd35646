// config.hpp
// The cyclic configuration con(Z_v, S): points Z_v, lines S + i.
//
// Text formats (bit-exact):
//   Levi graph   "levi <v> <k>" then one "p<i> l<j>" per incidence, sorted by
//                i and then j.
//   Incidence    v rows of v characters '0'/'1'; row j is line j = S + j,
//                column i is point i.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "baseline.hpp"
#include "circulant.hpp"
#include "errors.hpp"
#include "residue_ring.hpp"

namespace cyclconf {

class CyclicConfiguration {
public:
    explicit CyclicConfiguration(BaseLine base) : base_(std::move(base)) {}
    CyclicConfiguration(std::uint64_t v, std::vector<Residue> s) : base_(v, std::move(s)) {}

    const BaseLine& base() const noexcept { return base_; }
    const Modulus& modulus() const noexcept { return base_.modulus(); }
    std::uint64_t v() const noexcept { return base_.v(); }
    std::size_t k() const noexcept { return base_.k(); }

    /// Line j = S + j, sorted.
    ResidueSet line(Residue j) const { return AffineMap{1, j}.apply(modulus(), base_.elements()); }

    /// Index j with set == S + j, if the set is a line.
    std::optional<Residue> line_index(const ResidueSet& set) const {
        const auto& s = base_.elements();
        if (set.size() != s.size()) return std::nullopt;
        for (auto e : set) {
            const Residue j = modulus().sub(e, s.front());
            if (line(j) == set) return j;
        }
        return std::nullopt;
    }

    friend bool operator==(const CyclicConfiguration& a, const CyclicConfiguration& b) {
        return a.base_ == b.base_;
    }

private:
    BaseLine base_;
};

inline std::vector<ResidueSet> lines(const CyclicConfiguration& c) {
    std::vector<ResidueSet> out;
    out.reserve(c.v());
    for (Residue j = 0; j < c.v(); ++j) out.push_back(c.line(j));
    return out;
}

/// Checks the configuration axioms on the translates of an arbitrary set:
/// every point on exactly |S| lines, any two lines sharing at most one point.
inline bool validate(const Modulus& m, const ResidueSet& s) {
    const auto set = normalize_set(m, s);
    if (set.size() != s.size() || set.size() < 3) return false;
    detail::enforce_cap(m.value(), kEnumerationLimit, "validate");
    const auto v = m.value();
    std::vector<std::vector<char>> incidence(v, std::vector<char>(v, 0));
    std::vector<std::size_t> point_degree(v, 0);
    for (Residue j = 0; j < v; ++j)
        for (auto x : set) {
            const auto p = m.add(x, j);
            incidence[j][p] = 1;
            ++point_degree[p];
        }
    if (std::any_of(point_degree.begin(), point_degree.end(), [&](auto d) { return d != set.size(); }))
        return false;
    for (Residue a = 0; a < v; ++a)
        for (Residue b = a + 1; b < v; ++b) {
            std::size_t common = 0;
            for (auto x : set) common += incidence[b][m.add(x, a)];
            if (common > 1) return false;
        }
    return true;
}

inline bool validate(const CyclicConfiguration& c) { return validate(c.modulus(), c.base().elements()); }

/// Splits con(Z_v, S) into v/d copies of con(Z_d, S/g), g = v/d, where d is
/// the order of the subgroup generated by S after translating min(S) to 0.
/// Components are returned with canonical base lines on Z_d.
inline std::vector<CyclicConfiguration> decompose(const CyclicConfiguration& c) {
    const auto& m = c.modulus();
    const auto& s = c.base().elements();
    const ResidueSet shifted = AffineMap{1, m.neg(s.front())}.apply(m, s);
    std::uint64_t g = m.value();
    for (auto x : shifted) g = std::gcd(g, x);
    const std::uint64_t d = m.value() / g;
    std::vector<Residue> scaled;
    for (auto x : shifted) scaled.push_back(x / g);
    const CyclicConfiguration component(canonical_form(BaseLine(Modulus(d), scaled)));
    return std::vector<CyclicConfiguration>(g, component);
}

/// Point-line incidence graph; P_i ~ L_j iff i lies on S + j.
struct LeviGraph {
    std::uint64_t v = 0;
    std::size_t k = 0;
    std::vector<std::vector<Residue>> point_lines;  // sorted line indices per point
    std::vector<std::vector<Residue>> line_points;  // sorted points per line

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (const auto& ls : point_lines) e += ls.size();
        return e;
    }

    /// Vertices P_0..P_{v-1} then L_0..L_{v-1}; points colored 0, lines 1.
    ColoredGraph colored() const {
        ColoredGraph g;
        g.adjacency.assign(2 * v, {});
        g.color.assign(2 * v, 0);
        for (Residue i = 0; i < v; ++i)
            for (auto j : point_lines[i]) {
                g.adjacency[i].push_back(v + j);
                g.adjacency[v + j].push_back(i);
            }
        for (Residue j = 0; j < v; ++j) g.color[v + j] = 1;
        return g;
    }

    friend bool operator==(const LeviGraph&, const LeviGraph&) = default;
};

inline LeviGraph levi_graph(const CyclicConfiguration& c) {
    LeviGraph g{c.v(), c.k(), std::vector<std::vector<Residue>>(c.v()),
                std::vector<std::vector<Residue>>(c.v())};
    for (Residue j = 0; j < c.v(); ++j) {
        g.line_points[j] = c.line(j);
        for (auto i : g.line_points[j]) g.point_lines[i].push_back(j);
    }
    for (auto& ls : g.point_lines) std::sort(ls.begin(), ls.end());
    return g;
}

/// Length of a shortest cycle, by BFS from every vertex; nullopt if acyclic.
inline std::optional<std::size_t> girth(const ColoredGraph& g) {
    const std::size_t n = g.order();
    std::size_t best = 0;
    std::vector<std::size_t> dist(n), parent(n);
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    for (std::size_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[root] = 0;
        parent[root] = kUnseen;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            for (auto y : g.adjacency[x]) {
                if (dist[y] == kUnseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    const auto cycle = dist[x] + dist[y] + 1;
                    if (best == 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    if (best == 0) return std::nullopt;
    return best;
}

inline std::optional<std::size_t> girth(const LeviGraph& g) { return girth(g.colored()); }

inline CirculantMatrix incidence_matrix(const CyclicConfiguration& c) {
    return CirculantMatrix(c.modulus(), c.base().elements());
}

/// Inverse of incidence_matrix; throws if the support is not a base line.
inline CyclicConfiguration configuration_from(const CirculantMatrix& a) {
    return CyclicConfiguration(BaseLine(a.modulus(), a.support()));
}

inline std::string to_levi_text(const LeviGraph& g) {
    std::ostringstream os;
    os << "levi " << g.v << ' ' << g.k << '\n';
    for (Residue i = 0; i < g.v; ++i)
        for (auto j : g.point_lines[i]) os << 'p' << i << " l" << j << '\n';
    return os.str();
}

inline std::string to_incidence_text(const CirculantMatrix& a) {
    std::string out;
    for (Residue j = 0; j < a.v(); ++j) out += a.row_string(j) + '\n';
    return out;
}

/// Parses the Levi text format. Rejects malformed headers, out-of-range or
/// duplicate edges, and edges out of the canonical order.
inline LeviGraph parse_levi_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    LeviGraph g;
    if (!(in >> tag >> g.v >> g.k) || tag != "levi" || g.v == 0)
        throw std::invalid_argument("levi: bad header");
    detail::enforce_cap(g.v, kEnumerationLimit, "levi parse");
    g.point_lines.assign(g.v, {});
    g.line_points.assign(g.v, {});
    std::pair<Residue, Residue> last{0, 0};
    bool first = true;
    auto numeric = [](const std::string& t) {
        return t.size() >= 2 && t.size() <= 12 && t.find_first_not_of("0123456789", 1) == std::string::npos;
    };
    std::string rest;
    std::getline(in, rest);
    if (rest.find_first_not_of(" \t\r") != std::string::npos) throw std::invalid_argument("levi: bad header");
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        std::string p, l, extra;
        if (!(fields >> p >> l) || (fields >> extra) || p[0] != 'p' || l[0] != 'l' || !numeric(p) || !numeric(l))
            throw std::invalid_argument("levi: bad edge line '" + line + "'");
        const Residue i = std::stoull(p.substr(1));
        const Residue j = std::stoull(l.substr(1));
        if (i >= g.v || j >= g.v) throw std::invalid_argument("levi: vertex out of range");
        if (!first && !(last < std::pair{i, j})) throw std::invalid_argument("levi: edges out of order");
        first = false;
        last = {i, j};
        g.point_lines[i].push_back(j);
        g.line_points[j].push_back(i);
    }
    for (auto& ps : g.line_points) std::sort(ps.begin(), ps.end());
    return g;
}

/// Parses the incidence text format into a circulant; rejects non-circulant input.
inline CirculantMatrix parse_incidence_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> rows;
    for (std::string row; std::getline(in, row);)
        if (!row.empty()) rows.push_back(row);
    if (rows.empty()) throw std::invalid_argument("incidence: empty matrix");
    const std::uint64_t v = rows.size();
    detail::enforce_cap(v, kEnumerationLimit, "incidence parse");
    std::vector<Residue> support;
    for (Residue i = 0; i < v; ++i) {
        if (rows[0].size() != v) throw std::invalid_argument("incidence: matrix is not square");
        if (rows[0][i] == '1') support.push_back(i);
    }
    CirculantMatrix a(Modulus(v), support);
    for (Residue j = 0; j < v; ++j)
        if (rows[j] != a.row_string(j)) throw std::invalid_argument("incidence: matrix is not circulant");
    return a;
}

}  // namespace cyclconf
