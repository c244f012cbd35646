// bipartite_iso.hpp
// Exact, color-preserving isomorphism search between two-colored graphs.
//
// The search is classic individualization-refinement: both graphs are
// refined together on their disjoint union (1-dimensional Weisfeiler-Leman
// on vertex colors), the first non-singleton cell is split by pinning one
// vertex of the first graph against each same-colored candidate of the
// second, and the branch is abandoned as soon as the two halves disagree on
// a cell size. A discrete leaf is replayed edge by edge before it is
// accepted, so every returned map is a verified isomorphism.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace cyclconf {

/// Undirected graph with an initial vertex coloring (e.g. point = 0, line = 1).
struct ColoredGraph {
    std::vector<std::vector<std::size_t>> adjacency;
    std::vector<std::size_t> color;

    std::size_t order() const noexcept { return adjacency.size(); }
    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& n : adjacency) twice += n.size();
        return twice / 2;
    }
};

/// Vertex map g1 -> g2 (image[i] is the vertex of g2 that i maps to).
using VertexMap = std::vector<std::size_t>;

namespace detail {

class IsoSearch {
public:
    IsoSearch(const ColoredGraph& g1, const ColoredGraph& g2) : g1_(g1), g2_(g2), n_(g1.order()) {
        for (std::size_t i = 0; i < n_; ++i) {
            auto a = g1.adjacency[i];
            auto b = g2.adjacency[i];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            sorted1_.push_back(std::move(a));
            sorted2_.push_back(std::move(b));
        }
    }

    // Visits every isomorphism reachable from the pinned pairs; the visitor
    // returns false to stop. Returns false if stopped early.
    bool run(const std::vector<std::pair<std::size_t, std::size_t>>& pinned,
             const std::function<bool(const VertexMap&)>& visit) {
        if (g2_.order() != n_ || g1_.edge_count() != g2_.edge_count()) return true;
        if (n_ == 0) return visit({});
        std::vector<std::size_t> colors(2 * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            colors[i] = g1_.color[i];
            colors[n_ + i] = g2_.color[i];
        }
        std::size_t next = 1 + *std::max_element(colors.begin(), colors.end());
        for (auto [a, b] : pinned) {
            colors[a] = next;
            colors[n_ + b] = next;
            ++next;
        }
        return descend(std::move(colors), visit);
    }

private:
    const std::vector<std::size_t>& neighbors(std::size_t u) const {
        return u < n_ ? g1_.adjacency[u] : g2_.adjacency[u - n_];
    }

    // Refines to the coarsest equitable partition; colors are renumbered by
    // sorted signature so they mean the same thing in both halves.
    bool refine(std::vector<std::size_t>& colors) const {
        const std::size_t total = colors.size();
        std::size_t cells = count_cells(colors);
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(total);
        while (true) {
            for (std::size_t u = 0; u < total; ++u) {
                auto& s = sig[u].first;
                s.clear();
                s.push_back(colors[u]);
                for (auto w : neighbors(u)) s.push_back(colors[u < n_ ? w : n_ + w]);
                std::sort(s.begin() + 1, s.end());
                sig[u].second = u;
            }
            std::sort(sig.begin(), sig.end());
            std::size_t id = 0;
            for (std::size_t i = 0; i < total; ++i) {
                if (i > 0 && sig[i].first != sig[i - 1].first) ++id;
                colors[sig[i].second] = id;
            }
            if (!balanced(colors)) return false;
            const std::size_t now = id + 1;
            if (now == cells) return true;
            cells = now;
        }
    }

    static std::size_t count_cells(const std::vector<std::size_t>& colors) {
        auto c = colors;
        std::sort(c.begin(), c.end());
        return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
    }

    bool balanced(const std::vector<std::size_t>& colors) const {
        std::vector<std::ptrdiff_t> count(colors.size() + 1, 0);
        for (std::size_t u = 0; u < n_; ++u) ++count[colors[u]];
        for (std::size_t u = n_; u < 2 * n_; ++u) --count[colors[u]];
        return std::all_of(count.begin(), count.end(), [](auto c) { return c == 0; });
    }

    bool descend(std::vector<std::size_t> colors,
                 const std::function<bool(const VertexMap&)>& visit) {
        if (!refine(colors)) return true;

        // Smallest non-singleton cell, ties to lowest color id.
        std::vector<std::size_t> size(colors.size() + 1, 0);
        for (std::size_t u = 0; u < n_; ++u) ++size[colors[u]];
        std::size_t target = colors.size() + 1;
        for (std::size_t c = 0; c < size.size(); ++c)
            if (size[c] > 1 && (target > colors.size() || size[c] < size[target])) target = c;

        if (target > colors.size()) {
            VertexMap image(n_);
            std::vector<std::size_t> by_color(colors.size() + 1);
            for (std::size_t u = n_; u < 2 * n_; ++u) by_color[colors[u]] = u - n_;
            for (std::size_t u = 0; u < n_; ++u) image[u] = by_color[colors[u]];
            if (!is_isomorphism(image)) return true;
            return visit(image);
        }

        std::size_t pivot = 0;
        while (colors[pivot] != target) ++pivot;
        const std::size_t fresh = colors.size() + 1;
        for (std::size_t w = n_; w < 2 * n_; ++w) {
            if (colors[w] != target) continue;
            auto branch = colors;
            branch[pivot] = fresh;
            branch[w] = fresh;
            if (!descend(std::move(branch), visit)) return false;
        }
        return true;
    }

    bool is_isomorphism(const VertexMap& image) const {
        std::vector<char> hit(n_, 0);
        for (std::size_t u = 0; u < n_; ++u) {
            if (image[u] >= n_ || hit[image[u]] || g1_.color[u] != g2_.color[image[u]]) return false;
            hit[image[u]] = 1;
        }
        for (std::size_t u = 0; u < n_; ++u) {
            const auto& target = sorted2_[image[u]];
            for (auto w : sorted1_[u])
                if (!std::binary_search(target.begin(), target.end(), image[w])) return false;
        }
        return true;
    }

    const ColoredGraph& g1_;
    const ColoredGraph& g2_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> sorted1_;
    std::vector<std::vector<std::size_t>> sorted2_;
};

}  // namespace detail

/// First color-preserving isomorphism g1 -> g2 found, or nullopt.
///
/// `pinned` fixes vertex pairs before the search starts. It is only sound when
/// the caller knows some isomorphism respects the pins, e.g. pinning vertex 0
/// to vertex 0 when the automorphism group of g2 is transitive on that color.
inline std::optional<VertexMap> find_isomorphism(
    const ColoredGraph& g1, const ColoredGraph& g2,
    const std::vector<std::pair<std::size_t, std::size_t>>& pinned = {}) {
    std::optional<VertexMap> found;
    detail::IsoSearch(g1, g2).run(pinned, [&](const VertexMap& m) {
        found = m;
        return false;
    });
    return found;
}

/// All automorphisms of g, in search order.
inline std::vector<VertexMap> automorphisms(const ColoredGraph& g) {
    std::vector<VertexMap> out;
    detail::IsoSearch(g, g).run({}, [&](const VertexMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

}  // namespace cyclconf
