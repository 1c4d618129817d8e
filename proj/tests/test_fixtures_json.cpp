#include <doctest.h>

#include "skewclifford/errors.hpp"
#include "skewclifford/fixtures.hpp"
#include "skewclifford/json_io.hpp"
#include "skewclifford/rewrite.hpp"
#include "test_support.hpp"

using namespace skcl;

TEST_CASE("fixtures reproduce their expected dimensions") {
    CHECK(dimension(make_fixture("fdex1")) == 8);
    CHECK(dimension(make_fixture("fdex2")) == 8);
    CHECK(dimension(make_fixture("fdex3")) == 8);
    CHECK(dimension(make_fixture("inbetweenex1")) == 8);
    CHECK(dimension(make_fixture("zerodim")) == 0);
    CHECK(dimension(make_fixture("notsimple")) == 8);
    CHECK(dimension(make_fixture("betweenex2")) == 2);
    CHECK(dimension(make_fixture("inbetweenex1", {{"mu13", Rat(3)}})) == 4);
    CHECK(dimension(make_fixture("fdex3", {{"n", Rat(4)}, {"ones", Rat(1)}})) == 16);
}

TEST_CASE("fixtures reject bad ids and params") {
    CHECK_THROWS_AS(make_fixture("nosuch"), ValidationError);
    CHECK_THROWS_AS(make_fixture("fdex1", {{"zz", Rat(1)}}), ValidationError);
    CHECK_THROWS_AS(make_fixture("fdex1", {{"a", Rat(0)}}), ValidationError);
    CHECK_THROWS_AS(make_fixture("fdex2", {{"n", Rat(1, 2)}}), ValidationError);
    CHECK(fixture_ids().size() == 7);
}

TEST_CASE("rational json") {
    CHECK(rat_from_json(Json::parse("\"3/4\"")) == Rat(3, 4));
    CHECK(rat_from_json(Json::parse("-7")) == Rat(-7));
    CHECK(rat_to_json(Rat(5, 10)) == Json("1/2"));
    CHECK_THROWS_AS(rat_from_json(Json::parse("1.25")), ValidationError);
    CHECK_THROWS_AS(rat_from_json(Json::parse("\"x\"")), ValidationError);
}

TEST_CASE("presentation file round trip") {
    Presentation p = make_fixture("fdex1", {{"a", Rat(3)}, {"b", Rat(1)}});
    Json j = presentation_file_to_json(p.mu(), p.b(), "roundtrip");
    PresentationFile pf = presentation_file_from_json(j);
    CHECK(pf.mu == p.mu());
    CHECK(pf.b == p.b());
    CHECK(pf.name == "roundtrip");
    CHECK_NOTHROW(validate(pf.mu, pf.b));

    Json bad = j;
    bad["n"] = 7;
    CHECK_THROWS_AS(presentation_file_from_json(bad), ValidationError);
    CHECK_THROWS_AS(presentation_file_from_json(Json::parse("{\"mu\": [[1]]}")),
                    ValidationError);
}

TEST_CASE("element json round trip and normalization") {
    // words are 1-based outside, 0-based inside
    Element e = element_from_json(Json::parse(R"([{"word":[1,3],"coeff":"1/2"},
                                                 {"word":[],"coeff":"-2"}])"),
                                  3);
    CHECK(e.coeff(Word({0, 2})) == Rat(1, 2));
    CHECK(e.coeff(Word::unit()) == Rat(-2));
    Element back = element_from_json(element_to_json(e), 3);
    CHECK(back == e);

    // duplicate words merge, zero coefficients vanish
    Element merged = element_from_json(
        Json::parse(R"([{"word":[1],"coeff":"1"},{"word":[1],"coeff":"-1"}])"), 2);
    CHECK(merged.is_zero());

    CHECK_THROWS_AS(element_from_json(Json::parse(R"([{"word":[5],"coeff":"1"}])"), 3),
                    ValidationError);
    CHECK_THROWS_AS(element_from_json(Json::parse(R"([{"word":[1]}])"), 3), ValidationError);
}

TEST_CASE("graded presentation json shape") {
    Presentation p = make_fixture("betweenex2");
    Json j = graded_to_json(homogenize_single(p));
    REQUIRE(j.contains("generators"));
    REQUIRE(j.contains("relations"));
    CHECK(j["generators"].size() == 3);
    CHECK(j["generators"][2]["degree"] == 2);
    CHECK(j["relations"].size() == 5);  // 3 quadratic + 2 centrality
}
