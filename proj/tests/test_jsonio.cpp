#include <doctest.h>
#include <json.hpp>

#include <random>

#include "oracles.hpp"
#include "vspan/errors.hpp"
#include "vspan/json_io.hpp"
#include "vspan/statesum.hpp"
#include "vspan/surface.hpp"
#include "vspan/verify.hpp"

using namespace vspan;
using nlohmann::json;

TEST_SUITE("jsonio") {

TEST_CASE("diagram round trip") {
    for (const char* code : {"O1+U1+", "O1+U2+ ; U1+O2+", "() ; O5-U5-", "()"}) {
        Diagram d = parse_gauss(code);
        Diagram back = diagram_from_json(to_json(d));
        CHECK(back == d);
    }
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        Diagram d = oracle::random_diagram(rng, 1 + static_cast<int>(rng() % 7));
        CHECK(diagram_from_json(to_json(d)) == d);
    }
}

TEST_CASE("diagram schema") {
    json j = json::parse(to_json(parse_gauss("O1+U2+ ; U1+O2+ ; ()")));
    REQUIRE(j.contains("components"));
    REQUIRE(j["components"].size() == 3);
    CHECK(j["components"][2].empty());
    json first = j["components"][0][0];
    CHECK(first["label"] == 1);
    CHECK(first["role"] == "O");
    CHECK(first["sign"] == 1);
}

TEST_CASE("diagram json errors") {
    CHECK_THROWS_AS(diagram_from_json("not json"), ParseError);
    CHECK_THROWS_AS(diagram_from_json("{}"), ValidationError);
    CHECK_THROWS_AS(diagram_from_json(R"({"components": 3})"), ValidationError);
    CHECK_THROWS_AS(
        diagram_from_json(R"({"components": [[{"label":1,"role":"X","sign":1}]]})"),
        ValidationError);
    // structurally invalid codes fail diagram validation
    CHECK_THROWS_AS(
        diagram_from_json(R"({"components": [[{"label":1,"role":"O","sign":1}]]})"),
        ValidationError);
}

TEST_CASE("laurent schema is ascending with exact strings") {
    json j = json::parse(to_json(bracket(parse_gauss("O1+U2+ ; U1+O2+"))));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0][0] == -4);
    CHECK(j[0][1] == "-1");
    CHECK(j[1][0] == 4);
    CHECK(j[1][1] == "-1");

    json big = json::parse(to_json(oracle::poly({{1, 1}, {1, -1}}).pow(64)));
    bool found = false;
    for (const auto& term : big) {
        if (term[0] == 0) {
            CHECK(term[1] == "1832624140942590534");
            found = true;
        }
    }
    CHECK(found);

    CHECK(json::parse(to_json(LaurentPoly::zero())).empty());
}

TEST_CASE("surface schema") {
    json j = json::parse(to_json(surface_summary(parse_gauss("O1+U1+"))));
    CHECK(j["boundary"] == 3);
    CHECK(j["genus"] == 0);
    CHECK(j["m"] == 1);
    CHECK(j["proper"] == false);
    REQUIRE(j["crossings"].size() == 1);
    CHECK(j["crossings"][0]["id"] == 1);
    CHECK(j["crossings"][0]["proper"] == false);
    CHECK(j["crossings"][0]["faces"].size() == 4);
}

TEST_CASE("report schema") {
    json j = json::parse(to_json(verify_alt_span(parse_gauss("O1+U2+O3+U1+O2+U3+"))));
    CHECK(j["applicable"] == true);
    CHECK(j["passed"] == true);
    CHECK(j["subject"] == "O1+U2+O3+U1+O2+U3+");
    CHECK(j["measured"]["span"] == 12);
    CHECK(j["predicted"]["span"] == 12);
    CHECK(j["checks"]["span_formula"] == true);

    json inapp = json::parse(to_json(verify_alt_span(parse_gauss("O1+U1+"))));
    CHECK(inapp["applicable"] == false);
    CHECK(inapp["passed"] == false);
    CHECK(inapp["note"] == "not proper");
}

TEST_CASE("census schema") {
    CensusOptions o;
    o.c_max = 3;
    o.samples = 2;
    o.seed = 9;
    json j = json::parse(to_json(census(o)));
    CHECK(j["samples"] == 2);
    CHECK(j["all_passed"] == true);
    CHECK(j["outcomes"].contains("alt_span"));
    CHECK(j["outcomes"]["alt_span"].contains("applicable"));
    CHECK(j["outcomes"]["alt_span"].contains("passed"));
    REQUIRE(j["groups"].is_array());
    CHECK(j["groups"][0]["c"] == 3);
    CHECK(j["groups"][0]["span_genus"].is_array());
}

} // TEST_SUITE
