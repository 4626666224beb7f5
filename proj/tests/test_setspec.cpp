// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "relprime/errors.hpp"
#include "relprime/setspec.hpp"
#include "support.hpp"

using namespace relprime;

TEST_CASE("parse intervals, progressions and unions") {
    const auto x = parse_set_spec("1..4 + ap(7,3,5)");
    REQUIRE(x.parts().size() == 2);
    CHECK(x.parts()[0] == Progression::interval(1, 4));
    CHECK(x.parts()[1] == Progression(7, 3, 5));

    CHECK(parse_set_spec("  ap ( 2 , 4 , 3 )  ") == make_union(Progression(2, 4, 3)));
    CHECK(parse_set_spec("5..5") == make_union(Progression(5, 1, 1)));
    CHECK(parse_set_spec("1 .. 2+5..6").size() == 4);
}

TEST_CASE("parse errors") {
    for (const char* bad : {"", "1..", "..3", "1..4 +", "ap(1,2)", "ap(1,2,3", "-1..3", "+1..3", "1..4 5..6",
                            "0..3", "ap(0,1,1)", "ap(1,0,1)", "ap(1,1,0)", "4..1", "1...4", "bp(1,1,1)",
                            "1 0..20", "99999999999999999999..1", "ap(1,18446744073709551615,3)"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_set_spec_parts(bad), ParseError);
    }
    try {
        parse_set_spec_parts("1..4 + x");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("overlap surfaces as ValidationError, not ParseError") {
    CHECK_NOTHROW(parse_set_spec_parts("1..5 + 3..4"));
    CHECK_THROWS_AS(parse_set_spec("1..5 + 3..4"), ValidationError);
}

TEST_CASE("format then parse is the identity on unions") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = testing::random_union(rng, 25);
        const auto text = format_set_spec(x);
        REQUIRE(parse_set_spec(text) == x);
        REQUIRE(format_set_spec(parse_set_spec(text)) == text);
    }
    CHECK(format_set_spec(parse_set_spec("ap(7,3,5)+1..4")) == "1..4 + ap(7,3,5)");
}
