#include <doctest.h>

#include "oracles.hpp"
#include "vspan/errors.hpp"
#include "vspan/laurent.hpp"

using vspan::BigInt;
using vspan::LaurentPoly;
using oracle::poly;

TEST_SUITE("laurent") {

TEST_CASE("zero and one") {
    CHECK(LaurentPoly::zero().is_zero());
    CHECK(LaurentPoly{}.is_zero());
    CHECK_FALSE(LaurentPoly::one().is_zero());
    CHECK(LaurentPoly::one().coefficient(0) == 1);
    CHECK(LaurentPoly::monomial(0, 5).is_zero());
}

TEST_CASE("coefficient lookup") {
    LaurentPoly p = poly({{3, 2}, {-1, -4}});
    CHECK(p.coefficient(2) == 3);
    CHECK(p.coefficient(-4) == -1);
    CHECK(p.coefficient(0) == 0);
    CHECK(p.coefficient(17) == 0);
}

TEST_CASE("arithmetic and cancellation") {
    LaurentPoly a = poly({{1, 3}, {2, 0}});
    LaurentPoly b = poly({{-1, 3}, {1, -1}});
    CHECK(a + b == poly({{2, 0}, {1, -1}}));
    CHECK(a - a == LaurentPoly::zero());
    CHECK(-a == poly({{-1, 3}, {-2, 0}}));
    CHECK((a + b).coefficient(3) == 0);
}

TEST_CASE("multiplication") {
    LaurentPoly a = poly({{1, 1}, {1, -1}});
    CHECK(a * a == poly({{1, 2}, {2, 0}, {1, -2}}));
    CHECK(a * LaurentPoly::zero() == LaurentPoly::zero());
    CHECK(a * LaurentPoly::one() == a);
    // (A - A^-1)(A + A^-1) telescopes
    LaurentPoly b = poly({{1, 1}, {-1, -1}});
    CHECK(a * b == poly({{1, 2}, {-1, -2}}));
}

TEST_CASE("pow") {
    LaurentPoly d = oracle::delta();
    CHECK(d.pow(0) == LaurentPoly::one());
    CHECK(d.pow(1) == d);
    CHECK(d.pow(2) == poly({{1, 4}, {2, 0}, {1, -4}}));
    CHECK(d.pow(3) == d * d * d);
}

TEST_CASE("degrees and span") {
    LaurentPoly p = poly({{1, 7}, {5, -3}});
    CHECK(p.max_degree() == 7);
    CHECK(p.min_degree() == -3);
    CHECK(p.span() == 10);
    CHECK(LaurentPoly::one().span() == 0);
    CHECK_THROWS_AS(LaurentPoly::zero().span(), vspan::DomainError);
    CHECK_THROWS_AS(LaurentPoly::zero().max_degree(), vspan::DomainError);
}

TEST_CASE("big coefficients stay exact") {
    // (A + A^-1)^64 has a central coefficient of C(64,32), way past 2^53.
    LaurentPoly p = poly({{1, 1}, {1, -1}}).pow(64);
    CHECK(p.coefficient(0) == BigInt("1832624140942590534"));
    CHECK(p.coefficient(64) == 1);
    CHECK(p.span() == 128);
}

TEST_CASE("text form") {
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(LaurentPoly::one().to_string() == "1");
    CHECK(poly({{-1, 0}}).to_string() == "-1");
    CHECK(poly({{1, 1}}).to_string() == "A");
    CHECK(poly({{-1, 3}}).to_string() == "-A^3");
    CHECK(poly({{2, -2}}).to_string() == "2A^-2");
    CHECK(poly({{1, 1}, {1, -1}}).to_string() == "A^-1 + A");
    CHECK(poly({{-1, -2}, {-1, -10}}).to_string() == "-A^-10 - A^-2");
    CHECK(poly({{1, -4}, {1, -12}, {-1, -16}}).to_string() == "-A^-16 + A^-12 + A^-4");
}

TEST_CASE("terms map is ascending") {
    LaurentPoly p = poly({{1, 5}, {2, -7}, {3, 0}});
    std::vector<int> exps;
    for (const auto& [e, c] : p.terms())
        exps.push_back(e);
    CHECK(exps == std::vector<int>{-7, 0, 5});
}

} // TEST_SUITE
