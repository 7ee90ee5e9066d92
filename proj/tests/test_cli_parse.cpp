#include <doctest.h>

#include <functional>

#include "cli_parse.hpp"

using namespace hirzlog::cli;

namespace {

std::string parse_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.what();
    }
    FAIL("expected a parse error");
    return {};
}

} // namespace

TEST_CASE("surfaces") {
    CHECK(parse_surface("P2") == SurfaceSpec{SurfaceType::P2, 0});
    CHECK(parse_surface("F3") == SurfaceSpec{SurfaceType::F, 3});
    CHECK(parse_surface("BlP2").rank() == 2);
    CHECK(parse_surface("F0").name() == "F0");
    CHECK_THROWS_AS(parse_surface("F"), ParseError);
    CHECK_THROWS_AS(parse_surface("F-1"), ParseError);
    CHECK_THROWS_AS(parse_surface("Q"), ParseError);
}

TEST_CASE("divisor grammar") {
    const SurfaceSpec f1 = parse_surface("F1"), bl = parse_surface("BlP2"), p2 = parse_surface("P2");
    CHECK(parse_divisor("2,3", f1) == std::vector<std::int64_t>{2, 3});
    CHECK(parse_divisor(" -1 , -3 ", f1) == std::vector<std::int64_t>{-1, -3});
    CHECK(parse_divisor("+4", p2) == std::vector<std::int64_t>{4});
    CHECK(parse_divisor("3H+2E", bl) == std::vector<std::int64_t>{3, 2});
    CHECK(parse_divisor("-E", bl) == std::vector<std::int64_t>{0, -1});
    CHECK(parse_divisor("H - 2E", bl) == std::vector<std::int64_t>{1, -2});
    CHECK_THROWS_AS(parse_divisor("H+E+H", bl), ParseError);
    CHECK(parse_divisor("0", bl) == std::vector<std::int64_t>{0, 0});

    const std::string msg = parse_message([&] { parse_divisor("2,,3", f1); });
    CHECK(msg == "expected integer at position 3\n  2,,3\n    ^");
    CHECK_THROWS_AS(parse_divisor("2", f1), ParseError);
    CHECK_THROWS_AS(parse_divisor("2,3,4", f1), ParseError);
    CHECK_THROWS_AS(parse_divisor("3X", bl), ParseError);
    CHECK_THROWS_AS(parse_divisor("", p2), ParseError);
    CHECK_THROWS_AS(parse_divisor("99999999999999999999", p2), ParseError);
}

TEST_CASE("formatting round-trips") {
    const SurfaceSpec f1 = parse_surface("F1"), bl = parse_surface("BlP2"), p2 = parse_surface("P2");
    CHECK(format_divisor({3, 2}, bl) == "3H+2E");
    CHECK(format_divisor({0, -1}, bl) == "-E");
    CHECK(format_divisor({-2, 3}, f1) == "-2,3");
    for (std::int64_t x = -4; x <= 4; ++x)
        for (std::int64_t y = -4; y <= 4; ++y) {
            REQUIRE(parse_divisor(format_divisor({x, y}, bl), bl) == std::vector<std::int64_t>{x, y});
            REQUIRE(parse_divisor(format_divisor({x, y}, f1), f1) == std::vector<std::int64_t>{x, y});
        }
    CHECK(parse_divisor(format_divisor({-7}, p2), p2) == std::vector<std::int64_t>{-7});
}

TEST_CASE("degree lists") {
    CHECK(parse_degrees("2,2,1") == std::vector<std::int64_t>{2, 2, 1});
    CHECK(parse_degrees("2;2,1") == std::vector<std::int64_t>{2, 1});
    CHECK(parse_degrees("3;1,1,1") == std::vector<std::int64_t>{1, 1, 1});
    CHECK_THROWS_AS(parse_degrees("3;2,1"), ParseError);
    CHECK_THROWS_AS(parse_degrees("2,"), ParseError);
    CHECK_THROWS_AS(parse_degrees(""), ParseError);
}

TEST_CASE("arrangement files") {
    const ArrangementSpec a = parse_arrangement_text(R"({"surface":{"type":"F","e":1},"curves":[{"a":0,"b":1,"count":3},{"a":1,"b":0}]})");
    CHECK(a.surface == SurfaceSpec{SurfaceType::F, 1});
    CHECK(a.classes == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
    CHECK(a.counts == std::vector<std::int64_t>{3, 1});

    const ArrangementSpec p = parse_arrangement_text(R"({"surface":{"type":"P2"},"degrees":[2,2,1]})");
    CHECK(p.degrees() == std::vector<std::int64_t>{2, 2, 1});

    const ArrangementSpec b = parse_arrangement_text(R"({"surface":{"type":"BlP2"},"curves":[{"H":2,"E":0},{"H":0,"E":1}]})");
    CHECK(b.classes == std::vector<std::vector<std::int64_t>>{{2, 0}, {0, 1}});

    // the wrapper printed by `chern --output json`
    const ArrangementSpec w = parse_arrangement_text(R"({"arrangement":{"surface":{"type":"P2"},"degrees":[1]},"log_bundle":{}})");
    CHECK(w.degrees() == std::vector<std::int64_t>{1});

    for (const ArrangementSpec* s : {&a, &p, &b}) {
        const auto j = arrangement_to_json(*s);
        const ArrangementSpec back = parse_arrangement_json(j);
        CHECK(back.surface == s->surface);
        CHECK(back.classes == s->classes);
        CHECK(back.counts == s->counts);
        CHECK(arrangement_to_json(back).dump() == j.dump());
    }

    CHECK_THROWS_AS(parse_arrangement_text("{"), ParseError);
    CHECK_THROWS_AS(parse_arrangement_text(R"({"surface":{"type":"F","e":1},"curves":[{"a":1}]})"), ParseError);
    CHECK_THROWS_AS(parse_arrangement_text(R"({"surface":{"type":"F","e":1},"curves":[{"a":1,"b":0,"c":2}]})"), ParseError);
    // an empty list is well formed; the library rejects it
    CHECK_NOTHROW(parse_arrangement_text(R"({"surface":{"type":"P2"},"degrees":[]})"));
    CHECK_THROWS_AS(parse_arrangement_text(R"({"surface":{"type":"P2"},"degrees":["x"]})"), ParseError);
    CHECK_THROWS_AS(parse_arrangement_text(R"([1,2])"), ParseError);
    CHECK_THROWS_AS(parse_arrangement_file("/nonexistent/arrangement.json"), ParseError);
}
