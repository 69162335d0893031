#include <catch2/catch_amalgamated.hpp>

#include "terracini/reports.hpp"

using namespace terracini;

TEST_CASE("point set JSON round trip over Q") {
    RationalField q;
    const Json doc = Json::parse(R"({
        "n": 2,
        "field": "Q",
        "points": [["1","0","0"], ["1","1/2","-3"]]
    })");
    const auto set = point_set_from_json(q, doc);
    REQUIRE(set.k() == 2);
    CHECK(set.points[1].coords[1] == mpq_class(1, 2));

    const auto back = point_set_to_json(q, set);
    CHECK(back["n"] == 2);
    CHECK(back["field"] == "Q");
    CHECK(point_set_from_json(q, back).k() == 2);
}

TEST_CASE("point set JSON over a prime field") {
    PrimeField f7(7);
    const Json doc = Json::parse(R"({"n": 1, "field": {"Fp": 7}, "points": [["1","9"], ["0","1"]]})");
    const auto set = point_set_from_json(f7, doc);
    CHECK(set.points[0].coords[1] == 2);  // 9 mod 7
    CHECK(field_to_json(f7)["Fp"] == 7);
}

TEST_CASE("malformed point sets are rejected") {
    RationalField q;
    CHECK_THROWS_AS(point_set_from_json(q, Json::parse(R"({"points": []})")), InvalidInput);
    CHECK_THROWS_AS(
        point_set_from_json(q, Json::parse(R"({"n": 2, "points": [["1","0"]]})")),
        InvalidInput);
    CHECK_THROWS_AS(
        point_set_from_json(q, Json::parse(R"({"n": 1, "points": [["1","x"]]})")),
        InvalidInput);
}

TEST_CASE("verdict and envelope serialization") {
    const auto v = make_verdict(8, 9, 15, true, RankMethod::fraction_free, 0);
    const auto j = verdict_to_json(v);
    CHECK(j["rank"] == 8);
    CHECK(j["member"] == true);
    CHECK(j["method"] == "fraction-free");

    const auto env = report_envelope("membership", 42, j);
    CHECK(env["schema"] == kSchema);
    CHECK(env["seed"] == 42);
    CHECK(env["report"]["rank"] == 8);
}

TEST_CASE("identical inputs serialize to identical bytes") {
    RationalField q;
    const auto run = [&] {
        const auto probe = ah_probe(q, 2, 3, 3, 5, 12345);
        return dump_report(report_envelope("ah", 12345, probe_to_json(probe)));
    };
    CHECK(run() == run());
}

TEST_CASE("scan CSV shape") {
    RationalField q;
    const auto t = thresholds(2, 4, 1);
    const auto ex = construct_on_rational_curve(q, 2, 4, line_curve(q, 2), std::nullopt, 9);
    const auto row = scan_csv_row(t, &ex);
    CHECK(row.find("2,4,1,15,5,4,3,4,true,3,8,9,true,true") == 0);
    const auto header = scan_csv_header();
    CHECK(std::count(header.begin(), header.end(), ',') ==
          std::count(row.begin(), row.end(), ','));
}
