#include <doctest.h>

#include "vspan/comb_map.hpp"
#include "vspan/diagram.hpp"

using namespace vspan;

TEST_SUITE("combmap") {

TEST_CASE("dart coordinates") {
    CHECK(dart_of(0, kOverIn) == 0);
    CHECK(dart_of(2, kUnderOut) == 11);
    for (int c = 0; c < 3; ++c) {
        for (int s = 0; s < 4; ++s) {
            int d = dart_of(c, s);
            CHECK(crossing_of(d) == c);
            CHECK(slot_of(d) == s);
        }
    }
}

TEST_CASE("rotation is one counterclockwise 4-cycle per crossing") {
    for (const char* code : {"O1+U1+", "O1-U1-", "O1+U2-U1+O2-"}) {
        CombMap m = build_comb_map(parse_gauss(code));
        for (int c = 0; c < m.crossings; ++c) {
            int start = dart_of(c, kOverIn);
            int d = start;
            int steps = 0;
            do {
                d = m.rotation[d];
                ++steps;
            } while (d != start && steps <= 4);
            CHECK(steps == 4);
        }
    }
}

TEST_CASE("rotation order depends on the crossing sign") {
    CombMap plus = build_comb_map(parse_gauss("O1+U1+"));
    CHECK(plus.rotation[dart_of(0, kOverIn)] == dart_of(0, kUnderIn));
    CHECK(plus.rotation[dart_of(0, kUnderIn)] == dart_of(0, kOverOut));
    CHECK(plus.rotation[dart_of(0, kOverOut)] == dart_of(0, kUnderOut));
    CHECK(plus.rotation[dart_of(0, kUnderOut)] == dart_of(0, kOverIn));

    CombMap minus = build_comb_map(parse_gauss("O1-U1-"));
    CHECK(minus.rotation[dart_of(0, kOverIn)] == dart_of(0, kUnderOut));
    CHECK(minus.rotation[dart_of(0, kUnderOut)] == dart_of(0, kOverOut));
    CHECK(minus.rotation[dart_of(0, kOverOut)] == dart_of(0, kUnderIn));
    CHECK(minus.rotation[dart_of(0, kUnderIn)] == dart_of(0, kOverIn));
}

TEST_CASE("bands connect consecutive passages") {
    // kink: the single component visits O then U of the same crossing
    CombMap kink = build_comb_map(parse_gauss("O1+U1+"));
    CHECK(kink.edge_pair[dart_of(0, kOverOut)] == dart_of(0, kUnderIn));
    CHECK(kink.edge_pair[dart_of(0, kUnderOut)] == dart_of(0, kOverIn));

    CombMap hopf = build_comb_map(parse_gauss("O1+U2+ ; U1+O2+"));
    CHECK(hopf.edge_pair[dart_of(0, kOverOut)] == dart_of(1, kUnderIn));
    CHECK(hopf.edge_pair[dart_of(1, kUnderOut)] == dart_of(0, kOverIn));
    CHECK(hopf.edge_pair[dart_of(0, kUnderOut)] == dart_of(1, kOverIn));
    CHECK(hopf.edge_pair[dart_of(1, kOverOut)] == dart_of(0, kUnderIn));
}

TEST_CASE("edge pairing is a fixed-point-free involution") {
    CombMap m = build_comb_map(parse_gauss("U1+O2+U3-O1+U2+O3-"));
    for (int d = 0; d < m.dart_count(); ++d) {
        CHECK(m.edge_pair[d] != d);
        CHECK(m.edge_pair[m.edge_pair[d]] == d);
    }
}

TEST_CASE("signs and labels are recorded per crossing") {
    CombMap m = build_comb_map(parse_gauss("O7+U9-U7+O9-"));
    REQUIRE(m.crossings == 2);
    CHECK(m.label[0] == 7);
    CHECK(m.label[1] == 9);
    CHECK(m.sign[0] == +1);
    CHECK(m.sign[1] == -1);
}

TEST_CASE("free loops are counted, not mapped") {
    CombMap m = build_comb_map(parse_gauss("() ; O1+U1+ ; ()"));
    CHECK(m.crossings == 1);
    CHECK(m.free_loops == 2);
    CHECK(m.dart_count() == 4);
}

TEST_CASE("splice partners by sign and kind") {
    // positive crossing, A: arcs follow the orientation
    CHECK(splice_partner(dart_of(0, kOverIn), +1, SpliceKind::A) == dart_of(0, kUnderOut));
    CHECK(splice_partner(dart_of(0, kUnderIn), +1, SpliceKind::A) == dart_of(0, kOverOut));
    // positive crossing, B: arcs pair the two in-darts and the two out-darts
    CHECK(splice_partner(dart_of(0, kOverIn), +1, SpliceKind::B) == dart_of(0, kUnderIn));
    CHECK(splice_partner(dart_of(0, kOverOut), +1, SpliceKind::B) == dart_of(0, kUnderOut));
    // the two kinds swap at a negative crossing
    CHECK(splice_partner(dart_of(0, kOverIn), -1, SpliceKind::B) == dart_of(0, kUnderOut));
    CHECK(splice_partner(dart_of(0, kOverIn), -1, SpliceKind::A) == dart_of(0, kUnderIn));

    // involution, and the two pairs exhaust the four darts
    for (int sign : {+1, -1}) {
        for (SpliceKind k : {SpliceKind::A, SpliceKind::B}) {
            bool seen[4] = {};
            for (int s = 0; s < 4; ++s) {
                int d = dart_of(5, s);
                int p = splice_partner(d, sign, k);
                CHECK(splice_partner(p, sign, k) == d);
                CHECK(p != d);
                seen[slot_of(p)] = true;
            }
            CHECK((seen[0] && seen[1] && seen[2] && seen[3]));
        }
    }
}

} // TEST_SUITE
