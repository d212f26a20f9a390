#include "doctest.h"

#include "fixtures.hpp"
#include "tdmono/error.hpp"
#include "tdmono/strata/model_io.hpp"
#include "tdmono/strata/validate.hpp"

using namespace tdmono;
using namespace tdmono::strata;

namespace {

// Two projective lines meeting in a point.
const char* kTwoLines = R"({
  "schema": "tdmono/model/v1",
  "name": "two-lines",
  "dimension": 1,
  "num_components": 2,
  "strata": [
    {"I": [1], "dim": 1, "ranks": [1, 1], "lefschetz": [[[1]]], "pairings": [[[1]], [[1]]]},
    {"I": [2], "dim": 1, "ranks": [1, 1], "lefschetz": [[[1]]], "pairings": [[[1]], [[1]]]},
    {"I": [1, 2], "dim": 0, "ranks": [1], "lefschetz": [], "pairings": [[[1]]]}
  ],
  "restrictions": [
    {"from": [1], "to": [1, 2], "deg": 0, "matrix": [[1]]},
    {"from": [2], "to": [1, 2], "deg": 0, "matrix": [[1]]}
  ],
  "gysin": [
    {"from": [1, 2], "to": [1], "deg": 0, "matrix": [[1]]},
    {"from": [1, 2], "to": [2], "deg": 0, "matrix": [[1]]}
  ]
})";

std::string replace_once(std::string text, const std::string& from, const std::string& to)
{
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    return text;
}

} // namespace

TEST_CASE("parse a literal model")
{
    DegenerationModel m = parse_model(kTwoLines);
    CHECK(m.name == "two-lines");
    CHECK(m.dimension == 1);
    CHECK(m.num_components == 2);
    CHECK(m.strata.size() == 3);
    CHECK(m.strata_of_size(2) == std::vector<Subset>{{1, 2}});
    CHECK(m.chow_rank({1}, 1) == 1);
    CHECK(m.chow_rank({1, 2}, 1) == 0);
    REQUIRE(m.restriction({2}, {1, 2}, 0));
    CHECK(*m.restriction({2}, {1, 2}, 0) == IntMatrix{{1}});
    CHECK(m.gysin({1, 2}, {2}, 1) == nullptr);
    CHECK_FALSE(m.flags.claims_ordinary);
}

TEST_CASE("parse errors are classified")
{
    CHECK_THROWS_AS(parse_model("{not json"), SchemaError);
    CHECK_THROWS_AS(parse_model(replace_once(kTwoLines, "\"name\": \"two-lines\",", "")),
                    SchemaError);
    CHECK_THROWS_AS(parse_model(replace_once(kTwoLines, "tdmono/model/v1", "other/v9")),
                    SchemaError);

    SUBCASE("wrong pairing shape names the stratum")
    {
        std::string bad = replace_once(kTwoLines, R"("pairings": [[[1]], [[1]]]},
    {"I": [2])",
                                       R"("pairings": [[[1, 0]], [[1]]]},
    {"I": [2])");
        try {
            parse_model(bad);
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(std::string(e.what()).find("{1}") != std::string::npos);
        }
    }
    SUBCASE("missing face breaks downward closure")
    {
        std::string bad = replace_once(
            kTwoLines,
            R"({"I": [1], "dim": 1, "ranks": [1, 1], "lefschetz": [[[1]]], "pairings": [[[1]], [[1]]]},)",
            "");
        CHECK_THROWS_AS(parse_model(bad), StructureError);
    }
    SUBCASE("dimension formula")
    {
        std::string bad = replace_once(kTwoLines, R"("I": [1, 2], "dim": 0)",
                                       R"("I": [1, 2], "dim": 1)");
        CHECK_THROWS_AS(parse_model(bad), StructureError);
    }
    SUBCASE("too many components meet")
    {
        std::string bad =
            replace_once(kTwoLines, "\"num_components\": 2", "\"num_components\": 3");
        bad = replace_once(bad, R"({"I": [1, 2], "dim": 0)",
                           R"({"I": [3], "dim": 1, "ranks": [1, 1], "lefschetz": [[[1]]], "pairings": [[[1]], [[1]]]},
    {"I": [1, 2, 3], "dim": -1, "ranks": [], "lefschetz": [], "pairings": []},
    {"I": [1, 2], "dim": 0)");
        CHECK_THROWS_AS(parse_model(bad), StructureError);
    }
    SUBCASE("incidence between non-adjacent strata")
    {
        std::string bad = replace_once(kTwoLines, R"({"from": [2], "to": [1, 2], "deg": 0)",
                                       R"({"from": [2], "to": [1], "deg": 0)");
        CHECK_THROWS_AS(parse_model(bad), StructureError);
    }
    SUBCASE("unordered index set")
    {
        std::string bad = replace_once(kTwoLines, R"("to": [1, 2], "deg": 0, "matrix": [[1]]},
    {"from": [2])",
                                       R"("to": [2, 1], "deg": 0, "matrix": [[1]]},
    {"from": [2])");
        CHECK_THROWS_AS(parse_model(bad), StructureError);
    }
}

TEST_CASE("serialization round-trips")
{
    for (int n : {3, 4, 7}) {
        DegenerationModel m = fixtures::ngon(n);
        std::string text = serialize_model(m);
        DegenerationModel back = parse_model(text);
        CHECK(back == m);
        CHECK(serialize_model(back) == text);
    }
    DegenerationModel q = fixtures::single("quadric", fixtures::p1xp1());
    q.flags.claims_ordinary = true;
    CHECK(parse_model(serialize_model(q)) == q);
    CHECK(parse_model(kTwoLines) == parse_model(serialize_model(parse_model(kTwoLines))));
}

TEST_CASE("structure validation")
{
    CHECK(validate_structure(fixtures::ngon(3)).passed());
    CHECK(validate_structure(fixtures::single("quadric", fixtures::p1xp1())).passed());

    SUBCASE("asymmetric pairing")
    {
        DegenerationModel m = fixtures::single("quadric", fixtures::p1xp1());
        m.strata.at({1}).pairings[1] = IntMatrix{{0, 1}, {2, 0}};
        CheckReport r = validate_structure(m);
        CHECK(r.has_failure("pairing-asymmetry"));
    }
    SUBCASE("xi not self-adjoint")
    {
        DegenerationModel m = fixtures::single("quadric", fixtures::p1xp1());
        m.strata.at({1}).lefschetz[0] = IntMatrix{{1}, {2}};
        CHECK(validate_structure(m).has_failure("lefschetz-not-self-adjoint"));
    }
    SUBCASE("missing Gysin map")
    {
        DegenerationModel m = fixtures::ngon(3);
        m.gysins.erase(IncidenceKey{{1, 3}, {3}, 0});
        CheckReport r = validate_structure(m);
        REQUIRE(r.has_failure("missing-gysin"));
        CHECK(r.failures.front().location == "({1,3}->{3}, degree 0)");
    }
    SUBCASE("missing restriction")
    {
        DegenerationModel m = fixtures::ngon(4);
        m.restrictions.erase(IncidenceKey{{2}, {2, 3}, 0});
        CHECK(validate_structure(m).has_failure("missing-restriction"));
    }
}

TEST_CASE("hard Lefschetz")
{
    CheckReport line = check_hard_lefschetz(fixtures::single("line", fixtures::p1()));
    CHECK(line.passed());
    CheckReport quadric = check_hard_lefschetz(fixtures::single("quadric", fixtures::p1xp1()));
    CHECK(quadric.passed());
    bool saw_det2 = false;
    for (const auto& n : quadric.notes)
        saw_det2 = saw_det2 || n.find("det xi^2 = 2") != std::string::npos;
    CHECK(saw_det2);

    StratumChowData flat = fixtures::p1();
    flat.lefschetz[0] = IntMatrix{{0}};
    CheckReport bad = check_hard_lefschetz(fixtures::single("flat", flat));
    CHECK(bad.has_failure("lefschetz-degenerate"));

    StratumChowData lopsided = fixtures::p1xp1();
    lopsided.ranks = {1, 2, 2};
    lopsided.lefschetz[1] = IntMatrix{{1, 1}, {0, 0}};
    lopsided.pairings = {IntMatrix{{1, 0}}, IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{1}, {0}}};
    CHECK(check_hard_lefschetz(fixtures::single("lopsided", lopsided))
              .has_failure("rank-mismatch"));
}

TEST_CASE("Hodge index")
{
    CheckReport line = check_hodge_index(fixtures::single("line", fixtures::p1()));
    CHECK(line.passed());
    REQUIRE(line.notes.size() == 1);
    CHECK(line.notes[0].find("Gram [[1]]") != std::string::npos);

    CheckReport quadric = check_hodge_index(fixtures::single("quadric", fixtures::p1xp1()));
    CHECK(quadric.passed());
    REQUIRE(quadric.notes.size() == 2);
    // primitive class h1 - h2 has self-intersection -2
    CHECK(quadric.notes[1].find("primitive rank 1, Gram [[2]]") != std::string::npos);

    StratumChowData fake = fixtures::p1();
    fake.pairings = {IntMatrix{{-1}}, IntMatrix{{-1}}};
    CHECK(check_hodge_index(fixtures::single("fake", fake)).has_failure("hodge-index"));

    // P^1 x P^1 with the form on CH^1 made positive: the primitive class
    // becomes positive and the sign condition fails.
    StratumChowData wrong = fixtures::p1xp1();
    wrong.pairings[1] = IntMatrix{{1, 0}, {0, 1}};
    wrong.lefschetz = {IntMatrix{{1}, {1}}, IntMatrix{{1, 1}}};
    CHECK(check_hodge_index(fixtures::single("wrong", wrong)).has_failure("hodge-index"));
}

TEST_CASE("adjointness of restriction and Gysin")
{
    CHECK(check_adjointness(fixtures::ngon(3)).passed());
    CHECK(check_adjointness(fixtures::ngon(5)).passed());

    DegenerationModel doubled = fixtures::ngon(3);
    doubled.gysins.at(IncidenceKey{{1, 2}, {2}, 0}) = IntMatrix{{2}};
    CheckReport r = check_adjointness(doubled);
    REQUIRE(r.has_failure("adjointness"));
    CHECK(r.failures.size() == 1);
    CHECK(r.failures[0].location == "({2}->{1,2}, degree 0)");

    CheckReport empty = check_adjointness(fixtures::single("line", fixtures::p1()));
    CHECK(empty.passed());
    CHECK(empty.notes == std::vector<std::string>{"no incidences; vacuously adjoint"});
}

TEST_CASE("validate_all prefixes codes")
{
    CHECK(validate_all(fixtures::ngon(4)).passed());
    DegenerationModel m = fixtures::ngon(3);
    m.gysins.erase(IncidenceKey{{2, 3}, {2}, 0});
    CheckReport r = validate_all(m);
    CHECK(r.has_failure("structure/missing-gysin"));
    CHECK(r.has_failure("adjointness/adjointness"));
}
