#include <doctest.h>

#include "oracles.hpp"
#include "vspan/diagram.hpp"
#include "vspan/errors.hpp"

using namespace vspan;

TEST_SUITE("diagram") {

TEST_CASE("parse round trip") {
    for (const char* code : {
             "O1+U1+",
             "O1+U2+O3+U1+O2+U3+",
             "O1+U2+ ; U1+O2+",
             "O1+ ; U1+",
             "()",
             "() ; ()",
             "U1+O2+U3-O1+U2+O3-",
             "() ; O1-U1-",
         }) {
        Diagram d = parse_gauss(code);
        CHECK(d.to_string() == code);
        CHECK(parse_gauss(d.to_string()) == d);
    }
}

TEST_CASE("parse is whitespace tolerant") {
    Diagram a = parse_gauss("  O1+ U2+\t;\nU1+ O2+ ");
    Diagram b = parse_gauss("O1+U2+ ; U1+O2+");
    CHECK(a == b);
}

TEST_CASE("parse accepts a unicode minus") {
    Diagram a = parse_gauss("O1−U1−");
    CHECK(a == parse_gauss("O1-U1-"));
    CHECK(a.to_string() == "O1-U1-");
    // also when the sign is the last byte of the input
    CHECK(parse_gauss("O1-U1−") == parse_gauss("O1-U1-"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_gauss(""), ParseError);
    CHECK_THROWS_AS(parse_gauss("   "), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1*"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("X1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1+ ;"), ParseError);
    CHECK_THROWS_AS(parse_gauss("; O1+U1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("(O1+)"), ParseError);
    CHECK_THROWS_AS(parse_gauss("() O1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O12345678901234567890+U1+"), ParseError);
    try {
        parse_gauss("O1+U1*");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
    }
}

TEST_CASE("validation rejects structural garbage") {
    // label seen once
    CHECK_THROWS_AS(parse_gauss("O1+U1+O2+"), ValidationError);
    // three passages
    CHECK_THROWS_AS(parse_gauss("O1+U1+U1+ ; O2+U2+"), ValidationError);
    // both passages over
    CHECK_THROWS_AS(parse_gauss("O1+O1+"), ValidationError);
    // contradictory signs
    CHECK_THROWS_AS(parse_gauss("O1+U1-"), ValidationError);
    // split across components still has to pair up
    CHECK_THROWS_AS(parse_gauss("O1+ ; O1+"), ValidationError);
}

TEST_CASE("counts and lookups") {
    Diagram d = parse_gauss("O1+U2-U1+O2- ; () ; O5+U5+");
    CHECK(d.crossing_count() == 3);
    CHECK(d.component_count() == 3);
    CHECK(d.free_loop_count() == 1);
    CHECK(d.max_label() == 5);
    CHECK(d.label(d.id_of(5)) == 5);
    CHECK(d.label(d.id_of(1)) == 1);
    CHECK_THROWS_AS(d.id_of(4), DomainError);
    CHECK(d.sign_of(d.id_of(2)) == -1);
    CHECK(d.sign_of(d.id_of(5)) == +1);

    Occurrence over = d.occurrence(d.id_of(2), Role::Over);
    CHECK(over.component == 0);
    CHECK(over.position == 3);
    Occurrence under = d.occurrence(d.id_of(2), Role::Under);
    CHECK(under.component == 0);
    CHECK(under.position == 1);
}

TEST_CASE("writhe") {
    CHECK(parse_gauss("O1+U1+").writhe() == 1);
    CHECK(parse_gauss("O1-U1-").writhe() == -1);
    CHECK(parse_gauss("U1+O2+U3-O1+U2+O3-").writhe() == 1);
    CHECK(parse_gauss("()").writhe() == 0);
}

TEST_CASE("alternating predicate is cyclic") {
    CHECK(parse_gauss("O1+U1+").is_alternating());
    CHECK(parse_gauss("O1+U2+O3+U1+O2+U3+").is_alternating());
    CHECK(parse_gauss("O1+U2+ ; U1+O2+").is_alternating());
    CHECK(parse_gauss("()").is_alternating());
    CHECK(parse_gauss("() ; O1+U1+").is_alternating());
    // adjacent repeats, including across the wraparound
    CHECK_FALSE(parse_gauss("O1+O2+U1+U2+").is_alternating());
    CHECK_FALSE(parse_gauss("O1+U2+U1+O2+").is_alternating());
    // a single passage cyclically follows itself
    CHECK_FALSE(parse_gauss("O1+ ; U1+").is_alternating());
    // odd-length components always wrap onto a repeat
    CHECK_FALSE(parse_gauss("O1+U2+O3+ ; U1+O2+U3+").is_alternating());
}

TEST_CASE("connected component partition") {
    Diagram d = parse_gauss("O1+U2+ ; U1+O2+ ; O3+U3+ ; ()");
    ComponentPartition p = d.connected_components();
    CHECK(p.count() == 3);
    // components 0 and 1 share crossings 1 and 2
    bool found = false;
    for (const auto& block : p.blocks) {
        if (block.size() == 2) {
            CHECK(((block[0] == 0 && block[1] == 1) || (block[0] == 1 && block[1] == 0)));
            found = true;
        } else {
            CHECK(block.size() == 1);
        }
    }
    CHECK(found);
}

TEST_CASE("labeled round trips through build") {
    Diagram d = parse_gauss("O7+U9-U7+O9- ; ()");
    Diagram rebuilt = Diagram::build(d.labeled());
    CHECK(rebuilt == d);
    CHECK(rebuilt.to_string() == d.to_string());
}

TEST_CASE("random diagrams rebuild faithfully") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Diagram d = oracle::random_diagram(rng, 1 + static_cast<int>(rng() % 8));
        Diagram rebuilt = parse_gauss(d.to_string());
        CHECK(rebuilt == d);
    }
}

} // TEST_SUITE
