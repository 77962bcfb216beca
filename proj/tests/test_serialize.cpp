#include <doctest.h>

#include "ziglab/report.hpp"
#include "ziglab/serialize.hpp"

using namespace ziglab;

TEST_CASE("points and lifts survive the round trip") {
    Point2 p{Rational(2, 5), Rational(4, 5)};
    CHECK(point_from_json(json_point(p)) == p);

    MonotoneLift f(4, {2, 4, 4, 6});
    CHECK(lift_from_json(json_lift(f)) == f);

    CHECK_THROWS_AS(point_from_json(ordered_json{{"x", "1/2"}}), UsageError);
    CHECK_THROWS_AS(point_from_json(ordered_json{{"x", "a/b"}, {"y", "1/2"}}),
                    UsageError);
    CHECK_THROWS_AS(lift_from_json(ordered_json{{"n", 2}, {"values", {9, 9}}}),
                    UsageError);
}

TEST_CASE("boxes serialize as fraction strings") {
    Box b{Rational(1, 3), Rational(2, 3), Rational(1, 3)};
    ordered_json j = json_box(b);
    CHECK(j.dump() == R"({"ax":"1/3","ay":"2/3","az":"1/3"})");
    Box back{Rational::parse(j["ax"].get<std::string>()),
             Rational::parse(j["ay"].get<std::string>()),
             Rational::parse(j["az"].get<std::string>())};
    CHECK(back == b);
    CHECK(json_cw(CwBoxParams{2, 3, 3, 7}).dump() == R"({"p1":2,"p2":3,"p3":3,"q":7})");
}

TEST_CASE("witness schema is stable") {
    MaxCompositionResult r{Rational(1), MonotoneLift(2, {0, 2}), MonotoneLift(2, {1, 1})};
    CHECK(json_witness(2, r).dump() ==
          R"({"n":2,"f":[0,2],"g":[1,1],"rot_f":"0","rot_g":"0","rot_fg":"1"})");
}

TEST_CASE("family masks print as sorted lists") {
    CHECK(families_str(kFamily1) == "1");
    CHECK(families_str(kFamily2) == "2");
    CHECK(families_str(kFamily1 | kFamily3) == "1,3");
    CHECK(families_str(kFamily1 | kFamily2 | kFamily3) == "1,2,3");
}

TEST_CASE("reports expose failures as data") {
    Report r;
    r.target = "demo";
    r.checked = 5;
    r.add_extra("bound", "40");
    CHECK(r.ok());
    std::string t = r.text();
    CHECK(t.find("target: demo") != std::string::npos);
    CHECK(t.find("checked: 5") != std::string::npos);
    CHECK(t.find("bound: 40") != std::string::npos);
    CHECK(t.find("result: ok") != std::string::npos);
    CHECK(t.find("elapsed") == std::string::npos);  // timing is opt-in

    r.failures.push_back("broke");
    CHECK_FALSE(r.ok());
    CHECK(r.text().find("FAILED") != std::string::npos);
    CHECK(r.text().find("broke") != std::string::npos);

    ordered_json j = r.json();
    CHECK(j["target"] == "demo");
    CHECK(j["bound"] == "40");
    CHECK(j["ok"] == false);
    CHECK_FALSE(j.contains("elapsed_ms"));
    r.elapsed_ms = 12;
    CHECK(r.json(true).contains("elapsed_ms"));
    CHECK(r.text(true).find("elapsed_ms: 12") != std::string::npos);
}
