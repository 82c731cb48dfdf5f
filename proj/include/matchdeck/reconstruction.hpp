#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "matchdeck/errors.hpp"
#include "matchdeck/graph.hpp"
#include "matchdeck/matching.hpp"
#include "matchdeck/polynomial.hpp"

namespace matchdeck {

// Multiset of the matching polynomials of all vertex-deleted subgraphs.
// Cards are stored sorted by their canonical serialization, so deck
// equality is plain equality.
struct PolynomialDeck {
    int n = 0;
    std::vector<BivariatePoly> cards;

    friend bool operator==(const PolynomialDeck&, const PolynomialDeck&) = default;
};

// Validates and normalizes a card multiset. Cards of an n-vertex graph must
// be homogeneous of weighted degree n-1 (x-degree + 2 * y-degree).
inline PolynomialDeck make_deck(std::vector<BivariatePoly> cards) {
    if (cards.empty()) throw std::invalid_argument("make_deck: a deck needs at least one card");
    int n = static_cast<int>(cards.size());
    for (const BivariatePoly& card : cards)
        if (!card.homogeneous_weighted_degree(n - 1))
            throw InconsistentDeckError(
                "card '" + card.to_string() + "' is not homogeneous of weighted degree " +
                std::to_string(n - 1));
    std::sort(cards.begin(), cards.end(), [](const BivariatePoly& a, const BivariatePoly& b) {
        return a.to_string() < b.to_string();
    });
    return PolynomialDeck{n, std::move(cards)};
}

inline PolynomialDeck build_deck(const Graph& g, MatchingEngine& engine = shared_engine()) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("build_deck: graph must have at least one vertex");
    std::vector<BivariatePoly> cards;
    cards.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        cards.push_back(engine.polynomial(delete_vertex(g, v)));
    return make_deck(std::move(cards));
}

// Sum of all cards; for a real deck this equals d/dx of the graph's
// matching polynomial.
inline BivariatePoly deck_derivative_sum(const PolynomialDeck& deck) {
    BivariatePoly sum;
    for (const BivariatePoly& card : deck.cards) sum += card;
    return sum;
}

enum class ReconstructionMethod { odd_order, forest_rule, pendant_rule, externally_supplied, undetermined };

inline std::string to_string(ReconstructionMethod m) {
    switch (m) {
        case ReconstructionMethod::odd_order: return "odd-order";
        case ReconstructionMethod::forest_rule: return "forest-rule";
        case ReconstructionMethod::pendant_rule: return "pendant-rule";
        case ReconstructionMethod::externally_supplied: return "externally-supplied";
        case ReconstructionMethod::undetermined: return "undetermined";
    }
    return "undetermined";
}

struct ReconstructionResult {
    int n = 0;
    BivariatePoly known_part;                // every term with x-degree >= 1
    std::optional<BigInt> num_perfect;       // the x^0 y^(n/2) coefficient, when determined
    ReconstructionMethod method = ReconstructionMethod::undetermined;

    bool determined() const { return num_perfect.has_value(); }

    BivariatePoly full_polynomial() const {
        if (!num_perfect)
            throw std::logic_error("full_polynomial: perfect matching count undetermined");
        BivariatePoly p = known_part;
        if (n % 2 == 0) p.add_term(0, n / 2, *num_perfect);
        return p;
    }
};

// Recovers every coefficient with x-degree >= 1 from the deck sum: the card
// monomials sit one x-degree below the graph's, so the x^(i-1) y^j
// coefficient of the sum is i times the x^i y^j coefficient of the graph.
// Non-divisibility proves the multiset is not the deck of any graph.
inline ReconstructionResult recover_coefficients(const PolynomialDeck& deck) {
    ReconstructionResult r;
    r.n = deck.n;
    BivariatePoly sum = deck_derivative_sum(deck);
    for (const auto& [exp, c] : sum.terms()) {
        int i = exp.first + 1;
        if (c % i != 0)
            throw InconsistentDeckError("deck sum coefficient of x^" + std::to_string(exp.first) +
                                        "*y^" + std::to_string(exp.second) +
                                        " is not divisible by " + std::to_string(i));
        r.known_part.add_term(i, exp.second, c / i);
    }
    if (deck.n % 2 == 1) {
        r.num_perfect = BigInt(0);
        r.method = ReconstructionMethod::odd_order;
    }
    return r;
}

// Near-perfect matching count readable off a card of an n-vertex deck; zero
// by parity when n is odd (cards then have even order).
inline BigInt card_near_perfect_count(const BivariatePoly& card, int n) {
    if (n % 2 != 0) return 0;
    return card.coefficient(1, (n - 2) / 2);
}

// Deck test for a perfect matching, valid when the deck came from a forest
// (or any simple graph with a degree-1 vertex): one exists iff every card
// has a near-perfect matching. The lone exception is the edgeless forest on
// two vertices, whose deck {x, x} it cannot tell apart from K2's.
inline bool forest_has_perfect_matching(const PolynomialDeck& deck) {
    if (deck.n % 2 != 0) return false;
    for (const BivariatePoly& card : deck.cards)
        if (card_near_perfect_count(card, deck.n) < 1) return false;
    return true;
}

// Perfect matching count for decks of simple graphs with a pendant edge:
// the minimum near-perfect count over all cards.
inline BigInt pendant_num_perfect_matchings(const PolynomialDeck& deck) {
    BigInt best = card_near_perfect_count(deck.cards.front(), deck.n);
    for (const BivariatePoly& card : deck.cards)
        best = std::min(best, card_near_perfect_count(card, deck.n));
    return best;
}

enum class DeckHint { none, is_forest, has_pendant_edge };

// Full reconstruction pipeline. The perfect matching count is settled by the
// first applicable rule: odd order, an externally supplied count, the forest
// rule, the pendant rule; otherwise it stays unknown.
inline ReconstructionResult reconstruct(const PolynomialDeck& deck, DeckHint hint = DeckHint::none,
                                        std::optional<BigInt> supplied_np = std::nullopt) {
    ReconstructionResult r = recover_coefficients(deck);
    if (r.method == ReconstructionMethod::odd_order) return r;
    if (supplied_np) {
        r.num_perfect = std::move(supplied_np);
        r.method = ReconstructionMethod::externally_supplied;
        return r;
    }
    if (hint == DeckHint::is_forest) {
        r.num_perfect = BigInt(forest_has_perfect_matching(deck) ? 1 : 0);
        r.method = ReconstructionMethod::forest_rule;
        return r;
    }
    if (hint == DeckHint::has_pendant_edge) {
        r.num_perfect = pendant_num_perfect_matchings(deck);
        r.method = ReconstructionMethod::pendant_rule;
        return r;
    }
    return r;
}

inline nlohmann::json deck_to_json(const PolynomialDeck& deck) {
    nlohmann::json cards = nlohmann::json::array();
    for (const BivariatePoly& card : deck.cards) cards.push_back(poly_to_json(card));
    return nlohmann::json{{"n", deck.n}, {"cards", std::move(cards)}};
}

inline PolynomialDeck deck_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("cards"))
        throw ParseError("deck JSON must be an object with 'n' and 'cards'", 0);
    if (!j["n"].is_number_integer()) throw ParseError("deck 'n' must be an integer", 0);
    if (!j["cards"].is_array()) throw ParseError("deck 'cards' must be an array", 0);
    int n = j["n"].get<int>();
    std::vector<BivariatePoly> cards;
    for (const auto& card : j["cards"]) cards.push_back(poly_from_json(card));
    if (n != static_cast<int>(cards.size()))
        throw InconsistentDeckError("deck declares n = " + std::to_string(n) + " but has " +
                                    std::to_string(cards.size()) + " cards");
    return make_deck(std::move(cards));
}

}  // namespace matchdeck
