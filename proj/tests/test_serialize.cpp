#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace gorpts;

TEST_CASE("gorenstein JSON schema and round trip", "[serialize]") {
    const auto cfg = testsupport::default_config();
    const auto gr = gorenstein_points(make_profile({1, 3, 4, 3, 1}), cfg);

    const json j = gorenstein_to_json(gr, cfg, true);
    CHECK(j["h_vector"] == json::array({1, 3, 4, 3, 1}));
    CHECK(j["config"]["A"] == json::array({"1/1", "1/2", "1/3", "1/4"}));
    CHECK(j["config"]["Ia"] == json::array({0, 2, 4}));
    CHECK(j["config"]["Ib"] == json::array({0, 2, 4, 6}));
    CHECK(j["points"].size() == 12);
    CHECK(j["points"][0] == json::array({"1", "-4", "5", "-2"}));
    CHECK(j["labels"][0] == "0{0,1}");
    CHECK(j["verified"] == true);

    const json no_verify = gorenstein_to_json(gr, cfg, std::nullopt);
    CHECK_FALSE(no_verify.contains("verified"));

    const auto back = points_from_json(j);
    REQUIRE(back.size() == gr.points.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == gr.points[i]);
}

TEST_CASE("CSV round trip", "[serialize]") {
    const auto cfg = testsupport::default_config();
    const auto gr = gorenstein_points(make_profile({1, 3, 1}), cfg);

    const std::string csv = points_to_csv(gr);
    CHECK(csv.rfind("x0,x1,x2,x3,label\n", 0) == 0);

    std::istringstream in(csv);
    const auto back = points_from_csv(in);
    REQUIRE(back.size() == gr.points.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == gr.points[i]);
}

TEST_CASE("format detection and malformed input", "[serialize]") {
    std::istringstream js(R"({"points": [["1","2","3","4"], ["1","1","1","1"]]})");
    CHECK(parse_points(js).size() == 2);

    std::istringstream cs("x0,x1,x2,x3\n1,2,3,4\n");
    CHECK(parse_points(cs).size() == 1);

    std::istringstream empty("   ");
    CHECK_THROWS_AS(parse_points(empty), validation_error);

    std::istringstream noheader("1,2,3,4\n");
    CHECK_THROWS_AS(parse_points(noheader), validation_error);

    std::istringstream badjson("{ not json");
    CHECK_THROWS_AS(parse_points(badjson), validation_error);

    std::istringstream nopoints(R"({"h_vector": [1,3,1]})");
    CHECK_THROWS_AS(parse_points(nopoints), validation_error);

    std::istringstream shortrow("x0,x1,x2,x3\n1,2,3\n");
    CHECK_THROWS_AS(parse_points(shortrow), validation_error);
}

TEST_CASE("stick JSON carries forms, intersections and planes", "[serialize]") {
    const auto cfg = testsupport::default_config();
    const StickFigure sf = stick_figure(cfg, 1, 1);
    const json j = stick_to_json(sf, check_stick_figure(sf));
    CHECK(j["lines"].size() == 1);
    CHECK(j["lines"][0]["forms"][0] == json::array({"1", "1", "1", "1"}));
    CHECK(j["lines"][0]["forms"][1] == json::array({"1", "2", "3", "4"}));
    CHECK(j["intersections"].empty());
    CHECK(j["stick_figure_check"] == "pass");

    const StickFigure sf34 = stick_figure(cfg, 3, 4);
    const json big = stick_to_json(sf34, check_stick_figure(sf34));
    CHECK(big["lines"].size() == 12);
    // 4 * C(3,2) row-type + 3 * C(4,2) column-type crossings
    CHECK(big["intersections"].size() == 3 * 4 * 3 / 2 + 4 * 3 * 2 / 2);
    CHECK(big["row_planes"].size() == 3);
    CHECK(big["col_planes"].size() == 4);
}
