#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "matchdeck/errors.hpp"

namespace matchdeck {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt int_pow(BigInt base, int exp) {
    BigInt out = 1;
    for (; exp > 0; --exp) out *= base;
    return out;
}

// Sparse exact polynomial in x and y with unbounded integer coefficients.
// Terms are kept in canonical order: descending x-degree, then descending
// y-degree; zero coefficients are never stored.
class BivariatePoly {
public:
    struct TermOrder {
        bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
            return a > b;
        }
    };
    using TermMap = std::map<std::pair<int, int>, BigInt, TermOrder>;

    BivariatePoly() = default;

    static BivariatePoly zero() { return {}; }

    static BivariatePoly constant(BigInt c) {
        BivariatePoly p;
        p.add_term(0, 0, std::move(c));
        return p;
    }

    static BivariatePoly monomial(int i, int j, BigInt c = 1) {
        BivariatePoly p;
        p.add_term(i, j, std::move(c));
        return p;
    }

    static BivariatePoly x_power(int i) { return monomial(i, 0); }

    void add_term(int i, int j, const BigInt& c) {
        if (i < 0 || j < 0) throw std::invalid_argument("add_term: negative exponent");
        if (c == 0) return;
        auto key = std::make_pair(i, j);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigInt coefficient(int i, int j) const {
        auto it = terms_.find(std::make_pair(i, j));
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Every term satisfies i + 2j == d (vacuously true for the zero polynomial).
    bool homogeneous_weighted_degree(int d) const {
        for (const auto& [exp, c] : terms_)
            if (exp.first + 2 * exp.second != d) return false;
        return true;
    }

    BivariatePoly& operator+=(const BivariatePoly& other) {
        for (const auto& [exp, c] : other.terms_) add_term(exp.first, exp.second, c);
        return *this;
    }

    BivariatePoly& operator-=(const BivariatePoly& other) {
        for (const auto& [exp, c] : other.terms_) add_term(exp.first, exp.second, -c);
        return *this;
    }

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }

    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return out;
    }

    BivariatePoly scale(const BigInt& c) const {
        BivariatePoly out;
        if (c == 0) return out;
        for (const auto& [exp, coeff] : terms_) out.terms_.emplace(exp, coeff * c);
        return out;
    }

    BivariatePoly mul_monomial(int di, int dj) const {
        if (di < 0 || dj < 0) throw std::invalid_argument("mul_monomial: negative exponent");
        BivariatePoly out;
        for (const auto& [exp, coeff] : terms_)
            out.terms_.emplace(std::make_pair(exp.first + di, exp.second + dj), coeff);
        return out;
    }

    BivariatePoly differentiate_x() const {
        BivariatePoly out;
        for (const auto& [exp, coeff] : terms_)
            if (exp.first > 0)
                out.terms_.emplace(std::make_pair(exp.first - 1, exp.second), coeff * exp.first);
        return out;
    }

    BigInt evaluate(const BigInt& x, const BigInt& y) const {
        BigInt out = 0;
        for (const auto& [exp, coeff] : terms_)
            out += coeff * int_pow(x, exp.first) * int_pow(y, exp.second);
        return out;
    }

    // Canonical text form, e.g. "x^4 + 4*x^2*y + 2*y^2"; the zero polynomial
    // is "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [exp, coeff] : terms_) {
            bool negative = coeff < 0;
            if (first) {
                if (negative) out += "-";
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            out += term_body(exp.first, exp.second, negative ? BigInt(-coeff) : coeff);
        }
        return out;
    }

    static BivariatePoly parse(std::string_view text);

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    static std::string term_body(int i, int j, const BigInt& abs_coeff) {
        std::string factors;
        if (i > 0) factors += (i == 1) ? "x" : "x^" + std::to_string(i);
        if (j > 0) {
            if (!factors.empty()) factors += "*";
            factors += (j == 1) ? "y" : "y^" + std::to_string(j);
        }
        if (factors.empty()) return abs_coeff.str();
        if (abs_coeff == 1) return factors;
        return abs_coeff.str() + "*" + factors;
    }

    TermMap terms_;
};

namespace detail {

struct PolyLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    BigInt integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw ParseError("expected an integer", pos);
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    int exponent() {
        BigInt e = integer();
        if (e > 1'000'000) throw ParseError("exponent too large", pos);
        return static_cast<int>(e);
    }
};

}  // namespace detail

// Accepts the canonical text form (and harmless variations: factor order,
// extra whitespace, an optional leading sign).
inline BivariatePoly BivariatePoly::parse(std::string_view text) {
    detail::PolyLexer lx{text};
    BivariatePoly p;
    if (lx.peek() == '\0') throw ParseError("empty polynomial", lx.pos);
    bool first = true;
    while (true) {
        int sign = 1;
        char c = lx.peek();
        if (c == '-') {
            sign = -1;
            ++lx.pos;
        } else if (c == '+') {
            if (first) throw ParseError("unexpected '+'", lx.pos);
            ++lx.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", lx.pos);
        }
        first = false;

        BigInt coeff = 1;
        bool saw_coeff = false, saw_x = false, saw_y = false, saw_any = false;
        int i = 0, j = 0;
        while (true) {
            char t = lx.peek();
            if (t >= '0' && t <= '9') {
                if (saw_any) throw ParseError("coefficient must precede variables", lx.pos);
                coeff = lx.integer();
                saw_coeff = true;
            } else if (t == 'x' || t == 'y') {
                bool& seen = (t == 'x') ? saw_x : saw_y;
                if (seen) throw ParseError(std::string("duplicate '") + t + "' factor", lx.pos);
                seen = true;
                ++lx.pos;
                int e = 1;
                if (lx.peek() == '^') {
                    ++lx.pos;
                    e = lx.exponent();
                }
                (t == 'x' ? i : j) = e;
            } else {
                throw ParseError("expected a coefficient or variable", lx.pos);
            }
            saw_any = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!saw_coeff && !saw_x && !saw_y) throw ParseError("empty term", lx.pos);
        p.add_term(i, j, sign * coeff);
        char t = lx.peek();
        if (t == '\0') break;
        if (t != '+' && t != '-') throw ParseError("expected '+' or '-'", lx.pos);
    }
    return p;
}

// JSON form: array of [i, j, "<decimal coefficient>"] in canonical term order.
inline nlohmann::json poly_to_json(const BivariatePoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [exp, coeff] : p.terms())
        out.push_back({exp.first, exp.second, coeff.str()});
    return out;
}

inline BivariatePoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms", 0);
    BivariatePoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw ParseError("polynomial term must be [i, j, coefficient]", 0);
        if (!term[0].is_number_integer() || !term[1].is_number_integer())
            throw ParseError("polynomial exponents must be integers", 0);
        int i = term[0].get<int>();
        int jj = term[1].get<int>();
        if (i < 0 || jj < 0) throw ParseError("polynomial exponents must be nonnegative", 0);
        BigInt c;
        if (term[2].is_string())
            try {
                c = BigInt(term[2].get<std::string>());
            } catch (const std::exception&) {
                throw ParseError("invalid polynomial coefficient '" + term[2].get<std::string>() + "'",
                                 0);
            }
        else if (term[2].is_number_integer())
            c = BigInt(term[2].get<long long>());
        else
            throw ParseError("polynomial coefficient must be a decimal string", 0);
        if (p.coefficient(i, jj) != 0) throw ParseError("duplicate polynomial term", 0);
        p.add_term(i, jj, c);
    }
    return p;
}

}  // namespace matchdeck
