#include <doctest.h>

#include "trilink/gauss_code.hpp"
#include "trilink/verify.hpp"

using namespace trilink;

TEST_CASE("parse: three-component unlink") {
    gauss_diagram d = parse_gauss_code("link 3\ncomponent 1:\ncomponent 2:\ncomponent 3:\n");
    CHECK(d.component_count() == 3);
    CHECK(d.arrow_count() == 0);
    for (const component_info& c : d.components) CHECK_FALSE(c.based);
}

TEST_CASE("parse: hopf code gives two tail-on-1 arrows") {
    gauss_diagram d = parse_gauss_code(
        "link 3\n"
        "component 1: O1+ O2+\n"
        "component 2: U1+ U2+\n"
        "component 3:\n");
    REQUIRE(d.arrow_count() == 2);
    for (const arrow& a : d.arrows) {
        CHECK(a.tail.component == 1);
        CHECK(a.head.component == 2);
        CHECK(a.sign == +1);
    }
}

TEST_CASE("parse errors carry position and reason") {
    CHECK_THROWS_WITH_AS(parse_gauss_code("link 3\n"
                                          "component 1: X1+\n"
                                          "component 2:\n"
                                          "component 3:\n"),
                         doctest::Contains("expected O or U"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code(""), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("link 3\ncomponent 1: O1+\ncomponent 2: U1-\ncomponent 3:\n"),
                    parse_error);  // sign mismatch
    CHECK_THROWS_AS(parse_gauss_code("link 2\ncomponent 1: O1+\ncomponent 2:\n"),
                    parse_error);  // unpaired crossing
    CHECK_THROWS_AS(parse_gauss_code("link 1\ncomponent 2: \n"), parse_error);
}

TEST_CASE("comments and blank lines are ignored") {
    gauss_diagram d = parse_gauss_code(
        "# a hopf clasp\n\n"
        "link 3\n"
        "component 1*: O1+ U2+  # over then under\n"
        "component 2*: U1+ O2+\n"
        "component 3*:\n");
    CHECK(d == hopf_plus_sublink_diagram());
}

TEST_CASE("serialize round-trips and is canonical") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        gauss_diagram d = random_diagram(seed, 1 + seed % 7);
        std::string text = serialize_gauss_code(d);
        gauss_diagram back = parse_gauss_code(text);
        CHECK(validate(back).empty());
        CHECK(equivalent(back, d));
        CHECK(serialize_gauss_code(back) == text);
        CHECK(text.find(" \n") == std::string::npos);  // no trailing whitespace
    }
}
