#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchdeck {

// An unordered edge, stored with u < w.
struct Edge {
    int u = 0;
    int w = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), w(std::max(a, b)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Loop-free multigraph on vertices 0..n-1. Edges are kept as a sorted vector;
// parallel edges appear as repeated entries. Instances are plain values.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(check_vertex_count(n)) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(check_vertex_count(n)) {
        edges_.reserve(edges.size());
        for (const auto& [a, b] : edges) edges_.push_back(make_edge(a, b));
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(int a, int b) {
        Edge e = make_edge(a, b);
        edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
    }

    int multiplicity(int a, int b) const {
        if (a == b) return 0;
        Edge e(a, b);
        auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
        return static_cast<int>(hi - lo);
    }

    bool has_edge(int a, int b) const { return multiplicity(a, b) > 0; }

    // Degree counts parallel edges.
    int degree(int v) const {
        int d = 0;
        for (const Edge& e : edges_)
            if (e.u == v || e.w == v) ++d;
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(static_cast<std::size_t>(n_), 0);
        for (const Edge& e : edges_) {
            ++d[static_cast<std::size_t>(e.u)];
            ++d[static_cast<std::size_t>(e.w)];
        }
        return d;
    }

    bool is_simple() const {
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i] == edges_[i - 1]) return false;
        return true;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_vertex_count(int n) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        return n;
    }

    Edge make_edge(int a, int b) const {
        if (a == b) throw std::invalid_argument("loops are not supported");
        if (a < 0 || b < 0 || a >= n_ || b >= n_)
            throw std::out_of_range("edge endpoint out of range: {" + std::to_string(a) + ", " +
                                    std::to_string(b) + "} with n = " + std::to_string(n_));
        return Edge(a, b);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
};

// Removes v and all incident edges; remaining vertices are relabeled to
// 0..n-2 preserving relative order.
inline Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("delete_vertex: vertex " + std::to_string(v) +
                                " out of range for n = " + std::to_string(g.vertex_count()));
    Graph out(g.vertex_count() - 1);
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.w == v) continue;
        out.add_edge(e.u - (e.u > v ? 1 : 0), e.w - (e.w > v ? 1 : 0));
    }
    return out;
}

// Removes one copy of the edge {a, b}.
inline Graph delete_edge(const Graph& g, int a, int b) {
    if (!g.has_edge(a, b))
        throw std::invalid_argument("delete_edge: edge {" + std::to_string(a) + ", " +
                                    std::to_string(b) + "} not present");
    Graph out(g.vertex_count());
    Edge target(a, b);
    bool removed = false;
    for (const Edge& e : g.edges()) {
        if (!removed && e == target) {
            removed = true;
            continue;
        }
        out.add_edge(e.u, e.w);
    }
    return out;
}

// Removes both endpoints of the edge {a, b} (and every incident edge).
inline Graph delete_both_endpoints(const Graph& g, int a, int b) {
    if (!g.has_edge(a, b))
        throw std::invalid_argument("delete_both_endpoints: edge {" + std::to_string(a) + ", " +
                                    std::to_string(b) + "} not present");
    int lo = std::min(a, b), hi = std::max(a, b);
    Graph out(g.vertex_count() - 2);
    for (const Edge& e : g.edges()) {
        if (e.u == lo || e.u == hi || e.w == lo || e.w == hi) continue;
        int u = e.u - (e.u > lo ? 1 : 0) - (e.u > hi ? 1 : 0);
        int w = e.w - (e.w > lo ? 1 : 0) - (e.w > hi ? 1 : 0);
        out.add_edge(u, w);
    }
    return out;
}

// Complement within the same vertex set; defined for simple graphs only.
inline Graph complement(const Graph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("complement: undefined for graphs with parallel edges");
    Graph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int w = u + 1; w < g.vertex_count(); ++w)
            if (!g.has_edge(u, w)) out.add_edge(u, w);
    return out;
}

// Vertex-disjoint union; h's vertices are shifted by g's vertex count.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.vertex_count() + h.vertex_count());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.w);
    int shift = g.vertex_count();
    for (const Edge& e : h.edges()) out.add_edge(e.u + shift, e.w + shift);
    return out;
}

inline Graph path_graph(int n) {
    Graph out(n);
    for (int v = 0; v + 1 < n; ++v) out.add_edge(v, v + 1);
    return out;
}

// cycle_graph(2) is the multigraph with a doubled edge.
inline Graph cycle_graph(int n) {
    if (n < 2) throw std::invalid_argument("cycle_graph: need at least 2 vertices");
    Graph out(n);
    if (n == 2) {
        out.add_edge(0, 1);
        out.add_edge(0, 1);
        return out;
    }
    for (int v = 0; v < n; ++v) out.add_edge(v, (v + 1) % n);
    return out;
}

inline Graph complete_graph(int n) {
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) out.add_edge(u, w);
    return out;
}

// Relabels vertices: vertex v becomes perm[v]. perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    Graph out(g.vertex_count());
    for (const Edge& e : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.w)]);
    return out;
}

// Connected components (isolated vertices included), each relabeled to a
// dense prefix preserving relative vertex order. Deterministic: components
// ordered by their smallest original vertex.
inline std::vector<Graph> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.w);
        adj[static_cast<std::size_t>(e.w)].push_back(e.u);
    }
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comp_count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        int id = comp_count++;
        stack.push_back(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(u)] == -1) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    std::vector<int> local(static_cast<std::size_t>(n));
    std::vector<int> sizes(static_cast<std::size_t>(comp_count), 0);
    for (int v = 0; v < n; ++v) local[static_cast<std::size_t>(v)] = sizes[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]++;
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(comp_count));
    for (int id = 0; id < comp_count; ++id) out.emplace_back(sizes[static_cast<std::size_t>(id)]);
    for (const Edge& e : g.edges()) {
        int id = comp[static_cast<std::size_t>(e.u)];
        out[static_cast<std::size_t>(id)].add_edge(local[static_cast<std::size_t>(e.u)],
                                                   local[static_cast<std::size_t>(e.w)]);
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

// True iff g is a path on its vertex set (a single vertex counts as P1).
inline bool is_path_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    if (g.edge_count() != n - 1) return false;
    if (!g.is_simple()) return false;
    for (int d : g.degrees())
        if (d > 2) return false;
    return is_connected(g);
}

// True iff g is a cycle; the 2-cycle is the doubled edge on two vertices.
inline bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n) return false;
    for (int d : g.degrees())
        if (d != 2) return false;
    if (n == 2) return g.multiplicity(0, 1) == 2;
    return g.is_simple() && is_connected(g);
}

}  // namespace matchdeck
