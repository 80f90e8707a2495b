#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "vspan/errors.hpp"
#include "vspan/generators.hpp"
#include "vspan/statesum.hpp"
#include "vspan/surface.hpp"

using namespace vspan;
using oracle::poly;

TEST_SUITE("generators") {

TEST_CASE("two strand closures, frozen codes") {
    CHECK(gen_k({1}).to_string() == "U1+ ; O1+");
    CHECK(gen_k({2}).to_string() == "U1+O2+O1+U2+");
    CHECK(gen_k({3}).to_string() == "U1+O2+U3+ ; O1+U2+O3+");
    CHECK(gen_k({1, 1}).to_string() == "U1+U2+ ; O1+O2+");
    CHECK(gen_k({2, -1}).to_string() == "U1+O2+U3-O1+U2+O3-");
}

TEST_CASE("two strand closure bookkeeping") {
    for (const std::vector<int>& rs :
         {std::vector<int>{1}, {3}, {-2}, {1, 1}, {2, -1}, {1, -1, 2}, {2, 2, -3, 1}}) {
        Diagram d = gen_k(rs);
        int c = 0;
        int w = 0;
        for (int r : rs) {
            c += std::abs(r);
            w += r;
        }
        CHECK(d.crossing_count() == static_cast<std::size_t>(c));
        CHECK(d.writhe() == w);
        // component count flips with the parity of crossings + blocks
        std::size_t expect = (c + rs.size()) % 2 == 0 ? 2 : 1;
        CHECK(d.component_count() == expect);
    }
    CHECK_THROWS_AS(gen_k({}), DomainError);
    CHECK_THROWS_AS(gen_k({1, 0, 2}), DomainError);
}

TEST_CASE("reduced forms") {
    CHECK(reduce_k({1, 1}).to_string() == "U1+O2+ ; O1+U2+");
    CHECK(reduce_k({1, -1}).to_string() == "() ; ()");
    CHECK(reduce_k({1, 1, -2}).to_string() == "()");
    CHECK(reduce_k({1, 1, 1}) == gen_k({3}));
    CHECK(reduce_k({3}) == gen_k({3}));
    CHECK(reduce_k({2, -2}).to_string() == "() ; ()");
    CHECK_THROWS_AS(reduce_k({}), DomainError);
    CHECK_THROWS_AS(reduce_k({0}), DomainError);
}

TEST_CASE("even block counts collapse to their reduction") {
    // the virtual crossings cancel in pairs, so the invariant must agree
    for (const std::vector<int>& rs :
         {std::vector<int>{1, 1}, {1, -1}, {2, -1, 1, 1}, {3, 2, -1, -2}}) {
        CHECK(f_poly(gen_k(rs)) == f_poly(reduce_k(rs)));
    }
}

TEST_CASE("known invariant values in the family") {
    // one clasp with both virtuals: unlinks into two circles
    CHECK(f_poly(gen_k({1, -1})) == poly({{-1, 2}, {-1, -2}}));
    // single block of one crossing: span two, so no classical presentation
    CHECK(span_f(gen_k({1})) == 2);
    CHECK(span_f(gen_k({-1})) == 2);
    // the two-block (1,1) closure is the classical Hopf link in disguise
    CHECK(f_poly(gen_k({1, 1})) == poly({{-1, -2}, {-1, -10}}));
}

TEST_CASE("random sampler is deterministic and in spec") {
    Diagram a = random_proper_alternating(6, 99);
    Diagram b = random_proper_alternating(6, 99);
    CHECK(a == b);
    CHECK(a.crossing_count() == 6);
    CHECK(a.component_count() == 1);
    CHECK(a.is_alternating());
    CHECK(is_proper(a));
}

TEST_CASE("high genus chain family") {
    for (int n = 1; n <= 3; ++n) {
        for (int r : {0, 1, 4, 10}) {
            Diagram d = gen_dnr(n, r);
            CHECK(d.crossing_count() == static_cast<std::size_t>(10 * n + r - 2));
            CHECK(d.component_count() == 1);
            CHECK(d.is_alternating());
            CHECK(is_proper(d));
            CHECK(genus(d) == n);
        }
    }
    CHECK_THROWS_AS(gen_dnr(0, 0), DomainError);
    CHECK_THROWS_AS(gen_dnr(1, -1), DomainError);
}

} // TEST_SUITE
