#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "matchdeck/errors.hpp"
#include "matchdeck/graph.hpp"

namespace matchdeck {

inline constexpr int kDefaultCanonicalBound = 10;
inline constexpr int kMaxEnumerationVertices = 7;

// Canonical representative of an isomorphism class: the lexicographically
// smallest sorted edge multiset over all vertex relabelings. Edges are
// encoded as u * n + w with u < w, so vector comparison matches pair order.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint16_t> edges;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& cf) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<std::uint64_t>(cf.n));
        for (std::uint16_t e : cf.edges) mix(e);
        return static_cast<std::size_t>(h);
    }
};

inline Graph to_graph(const CanonicalForm& cf) {
    Graph g(cf.n);
    for (std::uint16_t e : cf.edges) g.add_edge(e / cf.n, e % cf.n);
    return g;
}

namespace detail {

// --- fast lane: simple graphs, n <= 11 ---------------------------------
//
// The sorted edge list of a simple graph, read as pairs in ascending order,
// corresponds bit-for-bit to the upper triangle packed with (0,1) as the
// most significant bit. Relabelings preserve the edge count, so the minimal
// edge list is the relabeling maximizing this packed word. In a maximizing
// labeling, vertex 0 has maximum degree and its neighbors are exactly
// labels 1..d (anything else loses at the first differing bit), which cuts
// the search to d! * (n-1-d)! orders per candidate for label 0.

inline std::uint64_t packed_upper_triangle(const std::array<std::uint32_t, 12>& adj, int n,
                                           const std::array<int, 12>& sigma) {
    std::uint64_t packed = 0;
    for (int i = 0; i < n; ++i) {
        std::uint32_t row = adj[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
        for (int j = i + 1; j < n; ++j)
            packed = (packed << 1) | ((row >> sigma[static_cast<std::size_t>(j)]) & 1u);
    }
    return packed;
}

// Maximum packed word over the pruned relabeling set. Returns early with any
// value > early_stop as soon as one is seen.
inline std::uint64_t simple_max_packed(const std::array<std::uint32_t, 12>& adj, int n,
                                       std::uint64_t early_stop) {
    std::array<int, 12> deg{};
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)]);
        max_deg = std::max(max_deg, deg[static_cast<std::size_t>(v)]);
    }
    std::uint64_t best = 0;
    std::array<int, 12> sigma{};
    std::vector<int> nbrs, rest;
    for (int v0 = 0; v0 < n; ++v0) {
        if (deg[static_cast<std::size_t>(v0)] != max_deg) continue;
        nbrs.clear();
        rest.clear();
        for (int u = 0; u < n; ++u) {
            if (u == v0) continue;
            ((adj[static_cast<std::size_t>(v0)] >> u) & 1u ? nbrs : rest).push_back(u);
        }
        sigma[0] = v0;
        do {
            for (std::size_t i = 0; i < nbrs.size(); ++i) sigma[i + 1] = nbrs[i];
            std::sort(rest.begin(), rest.end());
            do {
                for (std::size_t i = 0; i < rest.size(); ++i) sigma[1 + nbrs.size() + i] = rest[i];
                std::uint64_t packed = packed_upper_triangle(adj, n, sigma);
                if (packed > early_stop) return packed;
                best = std::max(best, packed);
            } while (std::next_permutation(rest.begin(), rest.end()));
        } while (std::next_permutation(nbrs.begin(), nbrs.end()));
    }
    return best;
}

inline std::array<std::uint32_t, 12> adjacency_rows(const Graph& g) {
    std::array<std::uint32_t, 12> adj{};
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= 1u << e.w;
        adj[static_cast<std::size_t>(e.w)] |= 1u << e.u;
    }
    return adj;
}

inline std::vector<std::uint16_t> unpack_edges(std::uint64_t packed, int n) {
    std::vector<std::uint16_t> out;
    int bit = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            --bit;
            if ((packed >> bit) & 1u) out.push_back(static_cast<std::uint16_t>(i * n + j));
        }
    return out;
}

// --- general lane: multigraphs (or large bounds) ------------------------
//
// Exhaustive search over relabelings, pruned by the structure of the first
// edge row: label 0 must carry a minimal row of (0,*) pairs, which forces a
// vertex whose descending multiplicity profile is lexicographically maximal
// and forces its neighbors into labels 1..k in descending multiplicity
// order. Neighbors of equal multiplicity and all non-neighbors still
// permute freely.

inline std::vector<std::uint16_t> encoded_edges(const Graph& g, const std::vector<int>& new_label) {
    std::vector<std::uint16_t> enc;
    enc.reserve(g.edges().size());
    int n = g.vertex_count();
    for (const Edge& e : g.edges()) {
        int a = new_label[static_cast<std::size_t>(e.u)];
        int b = new_label[static_cast<std::size_t>(e.w)];
        if (a > b) std::swap(a, b);
        enc.push_back(static_cast<std::uint16_t>(a * n + b));
    }
    std::sort(enc.begin(), enc.end());
    return enc;
}

inline std::vector<std::uint16_t> generic_canonical_edges(const Graph& g) {
    int n = g.vertex_count();
    // multiplicity profile per vertex, sorted descending
    std::vector<std::vector<int>> profile(static_cast<std::size_t>(n));
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(n));  // (mult, nbr)
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            int m = g.multiplicity(v, u);
            if (m > 0) inc[static_cast<std::size_t>(v)].emplace_back(m, u);
        }
        auto& iv = inc[static_cast<std::size_t>(v)];
        std::sort(iv.begin(), iv.end(), [](auto a, auto b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
        for (auto [m, u] : iv) profile[static_cast<std::size_t>(v)].push_back(m);
    }
    const std::vector<int>* best_profile = nullptr;
    for (int v = 0; v < n; ++v)
        if (!best_profile || profile[static_cast<std::size_t>(v)] > *best_profile)
            best_profile = &profile[static_cast<std::size_t>(v)];

    std::vector<std::uint16_t> best;
    bool have_best = false;
    std::vector<int> sigma(static_cast<std::size_t>(n));      // new label -> old vertex
    std::vector<int> new_label(static_cast<std::size_t>(n));  // old vertex -> new label

    auto consider = [&]() {
        for (int i = 0; i < n; ++i) new_label[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
        std::vector<std::uint16_t> enc = encoded_edges(g, new_label);
        if (!have_best || enc < best) {
            best = std::move(enc);
            have_best = true;
        }
    };

    for (int v0 = 0; v0 < n; ++v0) {
        if (profile[static_cast<std::size_t>(v0)] != *best_profile) continue;
        const auto& iv = inc[static_cast<std::size_t>(v0)];
        std::vector<int> rest;
        for (int u = 0; u < n; ++u)
            if (u != v0 && g.multiplicity(v0, u) == 0) rest.push_back(u);

        sigma[0] = v0;
        // recurse over equal-multiplicity neighbor groups, then the rest block
        std::function<void(std::size_t)> place_group = [&](std::size_t group_start) {
            if (group_start == iv.size()) {
                std::sort(rest.begin(), rest.end());
                do {
                    for (std::size_t i = 0; i < rest.size(); ++i)
                        sigma[1 + iv.size() + i] = rest[i];
                    consider();
                } while (std::next_permutation(rest.begin(), rest.end()));
                return;
            }
            std::size_t group_end = group_start;
            while (group_end < iv.size() && iv[group_end].first == iv[group_start].first) ++group_end;
            std::vector<int> group;
            for (std::size_t i = group_start; i < group_end; ++i) group.push_back(iv[i].second);
            do {
                for (std::size_t i = 0; i < group.size(); ++i)
                    sigma[1 + group_start + i] = group[i];
                place_group(group_end);
            } while (std::next_permutation(group.begin(), group.end()));
        };
        place_group(0);
    }
    return best;
}

}  // namespace detail

// Canonical form by exhaustive relabeling with sound pruning; bounded
// because the search is factorial in n.
inline CanonicalForm canonical_form(const Graph& g, int bound = kDefaultCanonicalBound) {
    int n = g.vertex_count();
    if (n > bound)
        throw CapacityError("canonical_form: " + std::to_string(n) + " vertices exceeds bound " +
                            std::to_string(bound));
    CanonicalForm cf;
    cf.n = n;
    if (g.edge_count() == 0) return cf;
    if (g.is_simple() && n <= 11) {
        std::uint64_t packed = detail::simple_max_packed(
            detail::adjacency_rows(g), n, std::numeric_limits<std::uint64_t>::max());
        cf.edges = detail::unpack_edges(packed, n);
    } else {
        cf.edges = detail::generic_canonical_edges(g);
    }
    return cf;
}

inline bool is_isomorphic(const Graph& a, const Graph& b, int bound = kDefaultCanonicalBound) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a, bound) == canonical_form(b, bound);
}

// Visits one representative per isomorphism class of simple graphs on n
// vertices, in a fixed deterministic order (ascending edge-set bitmask; the
// representative is the canonically labeled graph of its class).
template <typename Fn>
void for_each_simple_graph(int n, Fn&& fn) {
    if (n < 0) throw std::invalid_argument("for_each_simple_graph: negative vertex count");
    if (n > kMaxEnumerationVertices)
        throw CapacityError("for_each_simple_graph: n = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(kMaxEnumerationVertices));
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) pairs.emplace_back(u, w);
    const int np = static_cast<int>(pairs.size());
    for (std::uint64_t mask = 0; mask < (1ull << np); ++mask) {
        std::array<std::uint32_t, 12> adj{};
        for (int k = 0; k < np; ++k) {
            if ((mask >> k) & 1u) {
                adj[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].first)] |=
                    1u << pairs[static_cast<std::size_t>(k)].second;
                adj[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].second)] |=
                    1u << pairs[static_cast<std::size_t>(k)].first;
            }
        }
        // keep the graph iff its own labeling is already canonical; the quick
        // test is that label 0 realizes the maximal first row
        int max_deg = 0;
        for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, std::popcount(adj[static_cast<std::size_t>(v)]));
        int d0 = n > 0 ? std::popcount(adj[0]) : 0;
        if (n > 0) {
            if (d0 != max_deg) continue;
            std::uint32_t expected = ((1u << (d0 + 1)) - 2u);  // bits 1..d0
            if (adj[0] != expected) continue;
        }
        std::array<int, 12> identity{};
        for (int v = 0; v < n; ++v) identity[static_cast<std::size_t>(v)] = v;
        std::uint64_t own = detail::packed_upper_triangle(adj, n, identity);
        if (detail::simple_max_packed(adj, n, own) != own) continue;
        Graph g(n);
        for (int k = 0; k < np; ++k)
            if ((mask >> k) & 1u)
                g.add_edge(pairs[static_cast<std::size_t>(k)].first, pairs[static_cast<std::size_t>(k)].second);
        fn(g);
    }
}

inline std::vector<Graph> all_simple_graphs(int n) {
    std::vector<Graph> out;
    for_each_simple_graph(n, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace matchdeck
