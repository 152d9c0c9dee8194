#include <doctest.h>

#include "helpers.hpp"
#include "puzzle/tables.hpp"
#include "puzzle/synthesis.hpp"

using namespace puzzle;

TEST_CASE("F3 arithmetic") {
    CHECK(F3(2) + F3(2) == F3(1));
    CHECK(F3(0) - F3(1) == F3(2));
    CHECK(F3(2) * F3(2) == F3(1));
    CHECK(F3(-4) == F3(2));
    CHECK(F3(2).inverse() * F3(2) == F3(1));
    CHECK_THROWS_AS(F3(0).inverse(), std::domain_error);
}

TEST_CASE("monomials reduce with x^3 = x") {
    Monomial m = Monomial::from_factors({{2, 3}, {1, 4}, {2, 1}});
    CHECK(m.exponent(1) == 2);
    CHECK(m.exponent(2) == 2);
    CHECK(m.degree() == 4);
    CHECK((Monomial::var(1, 2) * Monomial::var(1, 2)).exponent(1) == 2);
    CHECK((Monomial::var(3) * Monomial::var(3, 2)).exponent(3) == 1);
}

TEST_CASE("parse and print round trip") {
    for (const char* s : {"x1 + x1^2 + 2*x2 + x2^2 + x3^2 + x1*x2*x3 + 2*x1^2*x2*x3", "0", "1", "2*x7", "x1^5 + 2*x1^3"}) {
        PolyF3 p = parse_poly(s);
        CHECK(parse_poly(to_string(p)) == p);
    }
    CHECK(parse_poly("x1^3") == parse_poly("x1"));
    CHECK(parse_poly("x1 + 2*x1").is_zero());
    CHECK_THROWS_AS(parse_poly("x1 +* x2"), ParseError);
}

TEST_CASE("evaluation respects ring operations") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        PolyF3 p = testutil::random_poly(rng, 5, 6), q = testutil::random_poly(rng, 5, 6);
        auto x = testutil::random_point(rng, 5);
        CHECK(poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x));
        CHECK(poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x));
        CHECK(poly_eval(-p, x) == -poly_eval(p, x));
        CHECK(p * q == q * p);
        CHECK((p + q) * q == p * q + q * q);
    }
}

TEST_CASE("missing variable is an error") {
    CHECK_THROWS_AS(poly_eval(parse_poly("x3"), std::vector<std::uint8_t>{1, 2}), MissingVariable);
}

TEST_CASE("interpolate inverts dense evaluation") {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        PolyF3 p = testutil::random_poly(rng, 4, 10);
        CHECK(interpolate(4, evaluate_table(p, 4)) == p);
    }
    std::vector<Val> vals(27);
    for (auto& v : vals) v = static_cast<Val>(rng() % 3);
    CHECK(evaluate_table(interpolate(3, vals), 3) == vals);
}

TEST_CASE("linear solve over F3") {
    auto sol = f3_linear_solve({{1, 1}, {1, 2}}, {F3(2), F3(0)});
    REQUIRE(sol);
    CHECK((*sol)[0] + (*sol)[1] == F3(2));
    CHECK((*sol)[0] + F3(2) * (*sol)[1] == F3(0));
    CHECK_FALSE(f3_linear_solve({{1, 1}, {1, 1}}, {F3(1), F3(2)}));
}

TEST_CASE("monomial orders") {
    auto lex = MonomialOrder::lex(3);
    CHECK(lex.compare(Monomial::var(1), Monomial::var(2, 2)) > 0);
    auto blk = MonomialOrder::block_lex({3}, {1, 2});
    CHECK(blk.compare(Monomial::var(3), Monomial::var(1, 2)) > 0);
    CHECK(blk.keep_block() == std::vector<int>{1, 2});
}
