#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <matchdeck/polynomial.hpp>

using namespace matchdeck;

namespace {

BivariatePoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exponent(0, 5);
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    BivariatePoly p;
    int terms = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int t = 0; t < terms; ++t) {
        BigInt c = small(rng);
        if (coin(rng)) c *= BigInt("340282366920938463463374607431768211456");  // 2^128
        p.add_term(exponent(rng), exponent(rng), c);
    }
    return p;
}

}  // namespace

TEST_CASE("term ordering and canonical text", "[polynomial]") {
    BivariatePoly p;
    p.add_term(0, 3, 2);
    p.add_term(6, 0, 1);
    p.add_term(2, 2, 9);
    p.add_term(4, 1, 6);
    CHECK(p.to_string() == "x^6 + 6*x^4*y + 9*x^2*y^2 + 2*y^3");
    CHECK(BivariatePoly::zero().to_string() == "0");
    CHECK(BivariatePoly::constant(-7).to_string() == "-7");
    CHECK(BivariatePoly::monomial(1, 1, -1).to_string() == "-x*y");

    BivariatePoly q;
    q.add_term(2, 0, 1);
    q.add_term(0, 1, -3);
    CHECK(q.to_string() == "x^2 - 3*y");
}

TEST_CASE("add_term merges and prunes zeros", "[polynomial]") {
    BivariatePoly p;
    p.add_term(1, 1, 5);
    p.add_term(1, 1, -5);
    CHECK(p.is_zero());
    CHECK(p.coefficient(1, 1) == 0);
    CHECK_THROWS_AS(p.add_term(-1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term(0, -2, 1), std::invalid_argument);
}

TEST_CASE("arithmetic", "[polynomial]") {
    BivariatePoly x2 = BivariatePoly::x_power(2);
    BivariatePoly y = BivariatePoly::monomial(0, 1);
    BivariatePoly k2 = x2 + y;  // M(K2)
    CHECK((k2 * k2).to_string() == "x^4 + 2*x^2*y + y^2");
    CHECK((k2 - k2).is_zero());
    CHECK(k2.scale(3).to_string() == "3*x^2 + 3*y");
    CHECK(k2.mul_monomial(1, 2).to_string() == "x^3*y^2 + x*y^3");
    CHECK(k2.evaluate(2, 5) == 9);
    CHECK((k2 * k2 * k2).evaluate(1, 1) == 8);
}

TEST_CASE("differentiation in x", "[polynomial]") {
    BivariatePoly m_c6 = BivariatePoly::parse("x^6 + 6*x^4*y + 9*x^2*y^2 + 2*y^3");
    CHECK(m_c6.differentiate_x().to_string() == "6*x^5 + 24*x^3*y + 18*x*y^2");
    CHECK(BivariatePoly::constant(4).differentiate_x().is_zero());
}

TEST_CASE("homogeneity check", "[polynomial]") {
    BivariatePoly m_c6 = BivariatePoly::parse("x^6 + 6*x^4*y + 9*x^2*y^2 + 2*y^3");
    CHECK(m_c6.homogeneous_weighted_degree(6));
    CHECK_FALSE(m_c6.homogeneous_weighted_degree(5));
    BivariatePoly mixed = BivariatePoly::parse("x^2 + x");
    CHECK_FALSE(mixed.homogeneous_weighted_degree(2));
    CHECK(BivariatePoly::zero().homogeneous_weighted_degree(3));
}

TEST_CASE("parse round-trips canonical text", "[polynomial]") {
    for (const char* text : {"0", "1", "-1", "x", "y", "x^2 + y", "x^2 + 2*y",
                             "x^6 + 6*x^4*y + 9*x^2*y^2 + 2*y^3", "3*x^2 - 3*y",
                             "-x^3 + x*y - 12*y^2"}) {
        BivariatePoly p = BivariatePoly::parse(text);
        CHECK(p.to_string() == text);
        CHECK(BivariatePoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("parse accepts loose but unambiguous input", "[polynomial]") {
    CHECK(BivariatePoly::parse("y*x") == BivariatePoly::monomial(1, 1));
    CHECK(BivariatePoly::parse("  2 * x ^ 3  ") == BivariatePoly::monomial(3, 0, 2));
    CHECK(BivariatePoly::parse("x + x") == BivariatePoly::monomial(1, 0, 2));
    CHECK(BivariatePoly::parse("5 - 5") == BivariatePoly::zero());
    CHECK(BivariatePoly::parse("-x") == BivariatePoly::monomial(1, 0, -1));
}

TEST_CASE("parse rejects malformed input with positions", "[polynomial]") {
    CHECK_THROWS_AS(BivariatePoly::parse(""), ParseError);
    CHECK_THROWS_AS(BivariatePoly::parse("x^"), ParseError);
    CHECK_THROWS_AS(BivariatePoly::parse("x**y"), ParseError);
    CHECK_THROWS_AS(BivariatePoly::parse("x^2x"), ParseError);
    CHECK_THROWS_AS(BivariatePoly::parse("z + 1"), ParseError);
    CHECK_THROWS_AS(BivariatePoly::parse("x*x"), ParseError);
    CHECK_THROWS_AS(BivariatePoly::parse("2*3"), ParseError);
    CHECK_THROWS_AS(BivariatePoly::parse("x 2"), ParseError);
    try {
        BivariatePoly::parse("x + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("ring axioms and the product rule hold on random polynomials", "[polynomial]") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        BivariatePoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q).differentiate_x() ==
              p.differentiate_x() * q + p * q.differentiate_x());
        CHECK(BivariatePoly::parse(p.to_string()) == p);
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
}

TEST_CASE("coefficients beyond 64 bits survive text and JSON round trips", "[polynomial]") {
    BigInt huge = BigInt("123456789012345678901234567890123456789");
    BivariatePoly p;
    p.add_term(3, 2, huge);
    p.add_term(0, 0, -huge * huge);
    CHECK(BivariatePoly::parse(p.to_string()) == p);
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(p.coefficient(3, 2) == huge);
}

TEST_CASE("polynomial JSON format", "[polynomial]") {
    BivariatePoly p = BivariatePoly::parse("x^2 + 2*y");
    nlohmann::json j = poly_to_json(p);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0] == nlohmann::json::array({2, 0, "1"}));
    CHECK(j[1] == nlohmann::json::array({0, 1, "2"}));

    CHECK(poly_from_json(nlohmann::json::parse("[[1,0,\"3\"],[0,1,4]]")).to_string() == "3*x + 4*y");
    CHECK(poly_from_json(nlohmann::json::array()).is_zero());
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse("[[1,0,\"3\"],[1,0,\"4\"]]")), ParseError);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse("[[1,0]]")), ParseError);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse("[[-1,0,\"3\"]]")), ParseError);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse("[[0,0,\"3x\"]]")), ParseError);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse("{}")), ParseError);
}
