#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "matchdeck/canonical.hpp"
#include "matchdeck/errors.hpp"
#include "matchdeck/graph.hpp"
#include "matchdeck/polynomial.hpp"

namespace matchdeck {

inline constexpr int kOracleVertexBound = 16;

// Direct enumeration of every matching (parallel edges give distinct
// matchings). Exponential; serves as the independent reference.
inline BivariatePoly matching_polynomial_oracle(const Graph& g) {
    int n = g.vertex_count();
    if (n > kOracleVertexBound)
        throw CapacityError("matching_polynomial_oracle: n = " + std::to_string(n) +
                            " exceeds enumeration bound " + std::to_string(kOracleVertexBound));
    const auto& edges = g.edges();
    std::vector<BigInt> count_by_size(static_cast<std::size_t>(n / 2 + 1), 0);
    std::function<void(std::size_t, std::uint32_t, int)> rec = [&](std::size_t idx,
                                                                   std::uint32_t used, int size) {
        if (idx == edges.size()) {
            ++count_by_size[static_cast<std::size_t>(size)];
            return;
        }
        rec(idx + 1, used, size);
        const Edge& e = edges[idx];
        std::uint32_t mask = (1u << e.u) | (1u << e.w);
        if ((used & mask) == 0) rec(idx + 1, used | mask, size + 1);
    };
    rec(0, 0, 0);
    BivariatePoly p;
    for (int s = 0; s <= n / 2; ++s) p.add_term(n - 2 * s, s, count_by_size[static_cast<std::size_t>(s)]);
    return p;
}

// Deterministic pivot for the edge recurrence: the lexicographically first
// edge incident to a maximum-degree vertex. Any choice yields the same
// polynomial; this one tends to break the graph apart quickly.
inline Edge select_edge(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("select_edge: graph has no edges");
    std::vector<int> deg = g.degrees();
    int max_deg = *std::max_element(deg.begin(), deg.end());
    for (const Edge& e : g.edges())
        if (deg[static_cast<std::size_t>(e.u)] == max_deg || deg[static_cast<std::size_t>(e.w)] == max_deg)
            return e;
    return g.edges().front();  // unreachable
}

struct MatchingStats {
    BivariatePoly polynomial;
    BigInt num_perfect;
    BigInt num_near_perfect;
    BigInt total_matchings;
};

// Edge recurrence M(G) = M(G - e) + y * M(G - u - w), with component
// factorization and memoization on canonical forms. The memo never evicts;
// once full (or for components above the canonicalization bound) recursion
// simply proceeds unmemoized.
class MatchingEngine {
public:
    struct Config {
        std::size_t memo_cap = std::size_t{1} << 20;
        int canonical_bound = kDefaultCanonicalBound;
        std::function<Edge(const Graph&)> edge_policy;  // defaults to select_edge
    };

    MatchingEngine() = default;
    explicit MatchingEngine(Config cfg) : cfg_(std::move(cfg)) {}

    BivariatePoly polynomial(const Graph& g) {
        std::vector<Graph> comps = connected_components(g);
        if (comps.size() == 1) return component_polynomial(comps.front());
        BivariatePoly out = BivariatePoly::constant(1);
        for (const Graph& comp : comps) out = out * component_polynomial(comp);
        return out;
    }

    MatchingStats stats(const Graph& g) {
        MatchingStats s;
        s.polynomial = polynomial(g);
        int n = g.vertex_count();
        s.num_perfect = (n % 2 == 0) ? s.polynomial.coefficient(0, n / 2) : BigInt(0);
        s.num_near_perfect = (n % 2 == 1) ? s.polynomial.coefficient(1, (n - 1) / 2) : BigInt(0);
        s.total_matchings = s.polynomial.evaluate(1, 1);
        return s;
    }

    std::size_t memo_size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.size();
    }

    const Config& config() const { return cfg_; }

private:
    BivariatePoly component_polynomial(const Graph& comp) {
        if (comp.edge_count() == 0) return BivariatePoly::x_power(comp.vertex_count());

        bool memoizable = comp.vertex_count() <= cfg_.canonical_bound;
        CanonicalForm key;
        if (memoizable) {
            key = canonical_form(comp, cfg_.canonical_bound);
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }

        Edge e = cfg_.edge_policy ? cfg_.edge_policy(comp) : select_edge(comp);
        BivariatePoly p = polynomial(delete_edge(comp, e.u, e.w)) +
                          polynomial(delete_both_endpoints(comp, e.u, e.w)).mul_monomial(0, 1);

        if (memoizable) {
            std::lock_guard<std::mutex> lock(mu_);
            if (memo_.size() < cfg_.memo_cap) memo_.emplace(std::move(key), p);
        }
        return p;
    }

    Config cfg_;
    mutable std::mutex mu_;
    std::unordered_map<CanonicalForm, BivariatePoly, CanonicalFormHash> memo_;
};

// Process-wide engine for the common one-shot calls.
inline MatchingEngine& shared_engine() {
    static MatchingEngine engine;
    return engine;
}

inline BivariatePoly matching_polynomial(const Graph& g) { return shared_engine().polynomial(g); }

inline MatchingStats matching_stats(const Graph& g) { return shared_engine().stats(g); }

}  // namespace matchdeck
