#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "matchdeck/canonical.hpp"
#include "matchdeck/errors.hpp"
#include "matchdeck/graph.hpp"
#include "matchdeck/graph_io.hpp"
#include "matchdeck/matching.hpp"
#include "matchdeck/reconstruction.hpp"

namespace matchdeck {

struct CounterexamplePair {
    Graph graph_a;
    Graph graph_b;
    PolynomialDeck shared_deck;
    BivariatePoly poly_a;
    BivariatePoly poly_b;
};

using ClauseCallback = std::function<void(const std::string&)>;

namespace detail {

inline void clause_ok(const ClauseCallback& cb, const std::string& clause) {
    if (cb) cb(clause);
}

inline void require(bool ok, const std::string& clause, const std::string& detail,
                    const ClauseCallback& cb) {
    if (!ok) throw VerificationError(clause, detail);
    clause_ok(cb, clause);
}

// Non-isomorphism certificate that works past the canonicalization bound:
// component counts, canonical forms when in reach, otherwise the already
// established polynomial difference (the polynomial is an isomorphism
// invariant).
inline bool certainly_non_isomorphic(const Graph& a, const Graph& b, bool polys_differ,
                                     int bound) {
    if (connected_components(a).size() != connected_components(b).size()) return true;
    if (a.vertex_count() <= bound && b.vertex_count() <= bound)
        return canonical_form(a, bound) != canonical_form(b, bound);
    return polys_differ;
}

}  // namespace detail

// Checks one member of the counterexample family: the 2k-cycle against two
// disjoint k-cycles (k = 2 uses the doubled edge as the 2-cycle), optionally
// with both graphs complemented. Throws VerificationError naming the first
// clause that fails; reports each passed clause through the callback.
inline CounterexamplePair verify_family_member(int k, bool complemented = false,
                                               MatchingEngine& engine = shared_engine(),
                                               const ClauseCallback& on_clause = nullptr) {
    if (k < 2) throw std::invalid_argument("verify_family_member: k must be at least 2");
    if (complemented && k == 2)
        throw std::invalid_argument("verify_family_member: the k = 2 member is a multigraph and has no complement");

    Graph big_cycle = cycle_graph(2 * k);
    Graph two_cycles = disjoint_union(cycle_graph(k), cycle_graph(k));
    std::string name_a = "C" + std::to_string(2 * k);
    std::string name_b = "C" + std::to_string(k) + "+C" + std::to_string(k);

    MatchingStats stats_a = engine.stats(big_cycle);
    detail::require(stats_a.num_perfect == 2, name_a + " has exactly 2 perfect matchings",
                    "found " + stats_a.num_perfect.str(), on_clause);

    MatchingStats stats_b = engine.stats(two_cycles);
    BigInt expected_b = (k % 2 == 1) ? 0 : 4;
    detail::require(stats_b.num_perfect == expected_b,
                    name_b + " has exactly " + expected_b.str() + " perfect matchings",
                    "found " + stats_b.num_perfect.str(), on_clause);

    {
        bool ok = true;
        for (int v = 0; v < big_cycle.vertex_count() && ok; ++v)
            ok = is_path_graph(delete_vertex(big_cycle, v));
        detail::require(ok, "every card of " + name_a + " is the path on " + std::to_string(2 * k - 1) + " vertices",
                        "a card is not a path", on_clause);
    }
    {
        bool ok = true;
        for (int v = 0; v < two_cycles.vertex_count() && ok; ++v) {
            std::vector<Graph> comps = connected_components(delete_vertex(two_cycles, v));
            ok = comps.size() == 2 &&
                 ((is_cycle_graph(comps[0]) && comps[0].vertex_count() == k &&
                   is_path_graph(comps[1]) && comps[1].vertex_count() == k - 1) ||
                  (is_path_graph(comps[0]) && comps[0].vertex_count() == k - 1 &&
                   is_cycle_graph(comps[1]) && comps[1].vertex_count() == k));
        }
        detail::require(ok, "every card of " + name_b + " is a " + std::to_string(k) +
                            "-cycle plus the path on " + std::to_string(k - 1) + " vertices",
                        "a card has the wrong shape", on_clause);
    }

    Graph a = complemented ? complement(big_cycle) : big_cycle;
    Graph b = complemented ? complement(two_cycles) : two_cycles;
    std::string label = complemented ? "complements of " + name_a + " and " + name_b
                                     : name_a + " and " + name_b;

    CounterexamplePair pair;
    pair.graph_a = a;
    pair.graph_b = b;
    pair.shared_deck = build_deck(a, engine);
    PolynomialDeck deck_b = build_deck(b, engine);
    detail::require(pair.shared_deck == deck_b, label + " share one polynomial deck",
                    "decks differ", on_clause);

    pair.poly_a = engine.polynomial(a);
    pair.poly_b = engine.polynomial(b);
    detail::require(pair.poly_a != pair.poly_b, label + " have distinct matching polynomials",
                    "polynomials coincide", on_clause);

    detail::require(detail::certainly_non_isomorphic(a, b, pair.poly_a != pair.poly_b,
                                                     engine.config().canonical_bound),
                    label + " are non-isomorphic", "no distinguishing invariant found", on_clause);
    return pair;
}

// The two polynomial identities behind the family's shared decks, plus their
// consequence: deleting any vertex from C_2k or the right vertex from
// C_k + C_k yields the same polynomial.
inline bool verify_proof_identity(int k, MatchingEngine& engine = shared_engine(),
                                  const ClauseCallback& on_clause = nullptr) {
    if (k < 2) throw std::invalid_argument("verify_proof_identity: k must be at least 2");

    auto P = [&](int n) { return engine.polynomial(path_graph(n)); };
    BivariatePoly long_path = P(2 * k - 1);
    BivariatePoly split = P(k - 1) * P(k) + (P(k - 2) * P(k - 1)).mul_monomial(0, 1);
    detail::require(long_path == split,
                    "M(P" + std::to_string(2 * k - 1) + ") = M(P" + std::to_string(k - 1) +
                        ")M(P" + std::to_string(k) + ") + y M(P" + std::to_string(k - 2) +
                        ")M(P" + std::to_string(k - 1) + ")",
                    "identity fails", on_clause);

    BivariatePoly cycle_card = engine.polynomial(disjoint_union(cycle_graph(k), path_graph(k - 1)));
    BivariatePoly cycle_split = P(k) * P(k - 1) + (P(k - 2) * P(k - 1)).mul_monomial(0, 1);
    detail::require(cycle_card == cycle_split,
                    "M(C" + std::to_string(k) + "+P" + std::to_string(k - 1) + ") = M(P" +
                        std::to_string(k) + ")M(P" + std::to_string(k - 1) + ") + y M(P" +
                        std::to_string(k - 2) + ")M(P" + std::to_string(k - 1) + ")",
                    "identity fails", on_clause);

    detail::require(long_path == cycle_card,
                    "M(P" + std::to_string(2 * k - 1) + ") = M(C" + std::to_string(k) + "+P" +
                        std::to_string(k - 1) + ")",
                    "card polynomials disagree", on_clause);
    return true;
}

struct SearchReport {
    int n = 0;
    std::size_t class_count = 0;
    std::size_t deck_group_count = 0;
    std::vector<CounterexamplePair> pairs;
};

// Exhaustive search over all isomorphism classes of simple n-vertex graphs
// for pairs sharing a deck but not a polynomial. Deterministic: classes are
// visited in canonical enumeration order and pairs reported in that order.
inline SearchReport search_counterexamples(int n, MatchingEngine& engine = shared_engine()) {
    if (n < 1) throw std::invalid_argument("search_counterexamples: n must be at least 1");
    SearchReport report;
    report.n = n;

    struct Entry {
        Graph g;
        BivariatePoly poly;
        PolynomialDeck deck;
    };
    std::vector<Entry> entries;
    for_each_simple_graph(n, [&](const Graph& g) {
        entries.push_back(Entry{g, engine.polynomial(g), build_deck(g, engine)});
    });
    report.class_count = entries.size();

    std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::vector<std::string> key;
        key.reserve(entries[i].deck.cards.size());
        for (const BivariatePoly& card : entries[i].deck.cards) key.push_back(card.to_string());
        groups[std::move(key)].push_back(i);
    }
    report.deck_group_count = groups.size();

    std::vector<std::pair<std::size_t, std::size_t>> found;
    for (const auto& [key, members] : groups)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (entries[members[a]].poly != entries[members[b]].poly)
                    found.emplace_back(members[a], members[b]);
    std::sort(found.begin(), found.end());

    for (auto [ia, ib] : found)
        report.pairs.push_back(CounterexamplePair{entries[ia].g, entries[ib].g, entries[ia].deck,
                                                  entries[ia].poly, entries[ib].poly});
    return report;
}

struct MinimalitySummary {
    int min_vertex_count = 0;
    int min_edge_count = 0;
    std::vector<std::size_t> minimal_indices;
};

// Flags the pair(s) with fewest vertices, ties broken by fewest edges.
inline MinimalitySummary minimality_report(const std::vector<CounterexamplePair>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("minimality_report: no pairs");
    auto rank = [](const CounterexamplePair& p) {
        return std::pair<int, int>(p.graph_a.vertex_count(),
                                   std::max(p.graph_a.edge_count(), p.graph_b.edge_count()));
    };
    std::pair<int, int> best = rank(pairs.front());
    for (const CounterexamplePair& p : pairs) best = std::min(best, rank(p));
    MinimalitySummary s;
    s.min_vertex_count = best.first;
    s.min_edge_count = best.second;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (rank(pairs[i]) == best) s.minimal_indices.push_back(i);
    return s;
}

inline nlohmann::json pair_to_json(const CounterexamplePair& p) {
    return nlohmann::json{{"graph6_a", to_graph6(p.graph_a)},
                          {"graph6_b", to_graph6(p.graph_b)},
                          {"edge_count_a", p.graph_a.edge_count()},
                          {"edge_count_b", p.graph_b.edge_count()},
                          {"polynomial_a", poly_to_json(p.poly_a)},
                          {"polynomial_b", poly_to_json(p.poly_b)},
                          {"shared_deck", deck_to_json(p.shared_deck)}};
}

inline nlohmann::json search_pairs_to_json(const std::vector<CounterexamplePair>& pairs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CounterexamplePair& p : pairs) arr.push_back(pair_to_json(p));
    return arr;
}

}  // namespace matchdeck
