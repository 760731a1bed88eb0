#include <doctest.h>

#include "trilink/rational.hpp"

using trilink::parse_rational;
using trilink::rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, -4) == rational(1, 2));
    CHECK(rational(2, -4) == rational(-1, 2));
    CHECK(rational(0, 5) == rational(0));
    CHECK(rational(1, 2) + rational(1, 3) == rational(5, 6));
    CHECK(rational(1, 2) - rational(1, 2) == rational(0));
    CHECK(rational(2, 3) * rational(3, 4) == rational(1, 2));
    CHECK(rational(1, 6) * rational(6) == rational(1));
    CHECK(-rational(1, 2) == rational(-1, 2));
    CHECK(rational(1, 3) < rational(1, 2));
}

TEST_CASE("rational string forms") {
    CHECK(rational(7).str() == "7");
    CHECK(rational(-1, 2).str() == "-1/2");
    CHECK(parse_rational("7") == rational(7));
    CHECK(parse_rational("-3/6") == rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

TEST_CASE("integer accessors") {
    CHECK(rational(6, 3).is_integer());
    CHECK(rational(6, 3).as_integer() == 2);
    CHECK_FALSE(rational(1, 2).is_integer());
    CHECK_THROWS_AS(rational(1, 2).as_integer(), std::domain_error);
}
