#include <catch2/catch_amalgamated.hpp>

#include "qe/config_io.hpp"
#include "oracles.hpp"

using namespace qe;

TEST_CASE("config JSON round trip", "[config_io]") {
    std::mt19937_64 rng(2025);
    for (int i = 0; i < 200; ++i) {
        const auto config = testing::random_valid_config(rng);
        const auto restored = parse_config(to_json(config).dump());
        REQUIRE(restored == config);
    }
}

TEST_CASE("parse the documented example text", "[config_io]") {
    const auto config = parse_config(R"({
        "p": 3, "g": 0, "chi": 1, "t": 0,
        "fibers": [{"kind": "tame", "a": 2}, {"kind": "tame", "a": 2}]
    })");
    CHECK(config.p == 3);
    CHECK(config.fibers.size() == 2);
    CHECK(config.fibers[0].kind == FiberKind::Tame);
    CHECK(config.fibers[0].residue == 2);
}

TEST_CASE("unknown fields are rejected", "[config_io]") {
    CHECK_THROWS_AS(
        parse_config(R"({"p":3,"g":0,"chi":1,"t":0,"fibers":[],"chii":2})"),
        ConfigParseError);
    CHECK_THROWS_AS(
        parse_config(R"({"p":3,"g":0,"chi":1,"t":0,"fibers":[{"kind":"tame","a":2,"x":1}]})"),
        ConfigParseError);
}

TEST_CASE("missing fields are rejected", "[config_io]") {
    CHECK_THROWS_AS(parse_config(R"({"p":3,"g":0,"chi":1,"t":0})"), ConfigParseError);
    CHECK_THROWS_AS(parse_config(R"({"p":3,"g":0,"chi":1,"fibers":[]})"), ConfigParseError);
    CHECK_THROWS_AS(parse_config(R"({"p":3,"g":0,"chi":1,"t":0,"fibers":[{"kind":"tame"}]})"),
                    ConfigParseError);
}

TEST_CASE("malformed values are rejected", "[config_io]") {
    CHECK_THROWS_AS(parse_config("not json at all"), ConfigParseError);
    CHECK_THROWS_AS(parse_config(R"({"p":3.5,"g":0,"chi":1,"t":0,"fibers":[]})"),
                    ConfigParseError);
    CHECK_THROWS_AS(parse_config(R"({"p":"three","g":0,"chi":1,"t":0,"fibers":[]})"),
                    ConfigParseError);
    CHECK_THROWS_AS(
        parse_config(R"({"p":3,"g":0,"chi":1,"t":0,"fibers":[{"kind":"feral","a":2}]})"),
        ConfigParseError);
    CHECK_THROWS_AS(parse_config(R"([1,2,3])"), ConfigParseError);
}

TEST_CASE("string-encoded integers are accepted for large values", "[config_io]") {
    const auto config =
        parse_config(R"({"p":3,"g":"123456789012345678901234567890","chi":1,"t":0,"fibers":[]})");
    CHECK(config.g == Int("123456789012345678901234567890"));
    // And they survive a round trip through emission.
    const auto restored = parse_config(to_json(config).dump());
    CHECK(restored == config);
}

TEST_CASE("emitted documents use the exact field names", "[config_io]") {
    const Json doc = to_json(parse_config(R"({"p":2,"g":1,"chi":0,"t":0,
        "fibers":[{"kind":"tame","a":1}]})"));
    CHECK(doc.contains("p"));
    CHECK(doc.contains("g"));
    CHECK(doc.contains("chi"));
    CHECK(doc.contains("t"));
    CHECK(doc.contains("fibers"));
    CHECK(doc["fibers"][0].contains("kind"));
    CHECK(doc["fibers"][0].contains("a"));
    CHECK(doc.dump() == R"({"p":2,"g":1,"chi":0,"t":0,"fibers":[{"kind":"tame","a":1}]})");
}

TEST_CASE("validation and certificate serialization", "[config_io]") {
    SurfaceConfig bad;
    bad.p = 3;
    bad.g = 0;
    bad.chi = 0;
    const Json report = to_json(validate(bad));
    CHECK(report["valid"] == false);
    CHECK(report["violations"][0]["rule"] == "chi-below-min");

    const Json cert = to_json(stable_threshold(example_surface_3_1()));
    CHECK(cert["stable_m"] == 5);
    CHECK(cert["first_success"] == 3);
    CHECK(cert["failures"] == Json::array({1, 2, 4}));
}
