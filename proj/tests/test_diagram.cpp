#include <doctest.h>

#include "trilink/diagram.hpp"
#include "trilink/gauss_code.hpp"
#include "trilink/verify.hpp"

using namespace trilink;

TEST_CASE("validate: empty three-component diagram is ok") {
    CHECK(validate(empty_diagram(3)).empty());
}

TEST_CASE("validate: dangling endpoint is reported") {
    gauss_diagram d = empty_diagram(3);
    d.components[0].size = 1;
    d.arrows.push_back(arrow{"1", +1, endpoint{1, 0}, endpoint{2, 5}});
    auto v = validate(d);
    REQUIRE_FALSE(v.empty());
    bool mentions_dangling = false;
    for (const std::string& msg : v)
        if (msg.find("dangling") != std::string::npos) mentions_dangling = true;
    CHECK(mentions_dangling);
}

TEST_CASE("validate: duplicate head uses a slot twice") {
    gauss_diagram d = empty_diagram(3);
    d.components[0].size = 2;
    d.components[1].size = 2;
    d.arrows.push_back(arrow{"1", +1, endpoint{1, 0}, endpoint{2, 0}});
    d.arrows.push_back(arrow{"2", +1, endpoint{1, 1}, endpoint{2, 0}});
    auto v = validate(d);
    REQUIRE_FALSE(v.empty());
    bool slot_reuse = false;
    for (const std::string& msg : v)
        if (msg.find("used 2 times") != std::string::npos) slot_reuse = true;
    CHECK(slot_reuse);
}

TEST_CASE("mirror is an involution and negates signs") {
    gauss_diagram hopf = hopf_plus_sublink_diagram();
    gauss_diagram m = mirror(hopf);
    for (const arrow& a : m.arrows) CHECK(a.sign == -1);
    CHECK(mirror(m) == hopf);
    CHECK(mirror(empty_diagram(3)) == empty_diagram(3));
}

TEST_CASE("crossing_change reverses one arrow and is an involution") {
    gauss_diagram hopf = hopf_plus_sublink_diagram();
    gauss_diagram once = crossing_change(hopf, "1");
    int idx = once.find_arrow("1");
    REQUIRE(idx >= 0);
    CHECK(once.arrows[idx].sign == -1);
    CHECK(once.arrows[idx].tail == hopf.arrows[hopf.find_arrow("1")].head);
    int signs = 0;
    for (const arrow& a : once.arrows) signs += a.sign;
    CHECK(signs == 0);  // one +, one -
    CHECK(crossing_change(once, "1") == hopf);
    CHECK_THROWS_AS(crossing_change(hopf, "zz"), std::invalid_argument);
}

TEST_CASE("move_base_point rotates the linear cut") {
    // endpoint sequence (a, b, c) -> forward -> (b, c, a)
    gauss_diagram d = empty_diagram(3);
    d.components[0].size = 3;
    d.components[1].size = 3;
    d.arrows.push_back(arrow{"a", +1, endpoint{1, 0}, endpoint{2, 0}});
    d.arrows.push_back(arrow{"b", +1, endpoint{1, 1}, endpoint{2, 1}});
    d.arrows.push_back(arrow{"c", +1, endpoint{1, 2}, endpoint{2, 2}});
    REQUIRE(validate(d).empty());

    gauss_diagram f = move_base_point(d, 1, slide::forward);
    CHECK(f.arrows[f.find_arrow("a")].tail.position == 2);
    CHECK(f.arrows[f.find_arrow("b")].tail.position == 0);
    CHECK(f.arrows[f.find_arrow("c")].tail.position == 1);
    CHECK(validate(f).empty());
    CHECK(move_base_point(f, 1, slide::backward) == d);

    gauss_diagram closed = d;
    closed.components[0].based = false;
    CHECK_THROWS_AS(move_base_point(closed, 1, slide::forward), std::invalid_argument);
    CHECK(move_base_point(d, 3, slide::forward) == d);  // no endpoints: no-op
}

TEST_CASE("move_base_point forward/backward is the identity on random diagrams") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        gauss_diagram d = random_diagram(seed, 5);
        for (int c = 1; c <= 3; ++c) {
            CHECK(move_base_point(move_base_point(d, c, slide::forward), c, slide::backward) ==
                  d);
            CHECK(move_base_point(move_base_point(d, c, slide::backward), c, slide::forward) ==
                  d);
        }
    }
}

TEST_CASE("canonical renames ids but preserves structure") {
    gauss_diagram d = empty_diagram(3);
    d.components[0].size = 2;
    d.components[1].size = 2;
    d.arrows.push_back(arrow{"x9", +1, endpoint{1, 1}, endpoint{2, 1}});
    d.arrows.push_back(arrow{"q", -1, endpoint{1, 0}, endpoint{2, 0}});
    gauss_diagram c = canonical(d);
    CHECK(c.arrows[0].id == "1");
    CHECK(c.arrows[0].tail.position == 0);
    CHECK(equivalent(c, d));
}
