#include <doctest.h>

#include "trilink/bouquet.hpp"
#include "trilink/gauss_code.hpp"

using namespace trilink;

namespace {

bouquet_presentation crossingless() {
    return parse_bouquet(
        "bouquet\n"
        "vertex: e f g e f g\n"
        "edge e:\nedge f:\nedge g:\n");
}

}  // namespace

TEST_CASE("crossingless bouquet compiles to the based unlink") {
    gauss_diagram d = compile_bouquet(crossingless());
    CHECK(d.component_count() == 3);
    CHECK(d.arrow_count() == 0);
    for (const component_info& c : d.components) CHECK(c.based);
}

TEST_CASE("bouquet validation catches malformed presentations") {
    bouquet_presentation b = crossingless();
    b.vertex_word = {'e', 'e', 'f', 'f', 'g', 'e'};
    CHECK_FALSE(validate_bouquet(b).empty());

    // unpaired crossing
    CHECK_THROWS_AS(parse_bouquet("bouquet\n"
                                  "vertex: e f g e f g\n"
                                  "edge e: O1+\nedge f:\nedge g:\n"),
                    parse_error);
    // sign mismatch across a pair
    CHECK_THROWS_AS(parse_bouquet("bouquet\n"
                                  "vertex: e f g e f g\n"
                                  "edge e: O1+\nedge f: U1-\nedge g:\n"),
                    parse_error);
    // not a Gauss word
    CHECK_THROWS_AS(parse_bouquet("bouquet\n"
                                  "vertex: e e e f g g\n"
                                  "edge e:\nedge f:\nedge g:\n"),
                    parse_error);
}

TEST_CASE("compile assigns components by first occurrence and pairs tokens") {
    bouquet_presentation b = parse_bouquet(
        "bouquet\n"
        "vertex: g e f g e f\n"
        "edge g: O1+\n"
        "edge e: U1+ O2-\n"
        "edge f: U2-\n");
    gauss_diagram d = compile_bouquet(b);
    REQUIRE(validate(d).empty());
    // g is component 1, e component 2, f component 3
    int idx1 = d.find_arrow("1");
    REQUIRE(idx1 >= 0);
    CHECK(d.arrows[idx1].tail.component == 1);
    CHECK(d.arrows[idx1].head.component == 2);
    int idx2 = d.find_arrow("2");
    CHECK(d.arrows[idx2].tail.component == 2);
    CHECK(d.arrows[idx2].head.component == 3);
}

TEST_CASE("bouquet_mirror compiles to the diagram mirror") {
    bouquet_presentation b = parse_bouquet(
        "bouquet\n"
        "vertex: e f g e f g\n"
        "edge e: O1+ U2+\n"
        "edge f: U1+ O3-\n"
        "edge g: O2+ U3-\n");
    CHECK(compile_bouquet(bouquet_mirror(b)) == mirror(compile_bouquet(b)));
}

TEST_CASE("cyclic_rebase: shift 0 and full rotation are the identity") {
    bouquet_presentation b = parse_bouquet(
        "bouquet\n"
        "vertex: e f g e f g\n"
        "edge e: O1+ U2+\n"
        "edge f: U1+ O3-\n"
        "edge g: O2+ U3-\n");
    CHECK(cyclic_rebase(b, 0) == b);
    CHECK(cyclic_rebase(b, 6) == b);
    // rebasing composes: six single shifts return to the start
    bouquet_presentation cur = b;
    for (int s = 0; s < 6; ++s) cur = cyclic_rebase(cur, 1);
    CHECK(cur == b);
}

TEST_CASE("cyclic_rebase reverses straddling edges and fixes signs") {
    // vertex word e f g e f g, shift 1: word becomes f g e f g e.
    // e's occurrences (0,3) map to (5,2): swapped; f: (1,4)->(0,3): kept;
    // g: (2,5)->(1,4): kept.
    bouquet_presentation b = parse_bouquet(
        "bouquet\n"
        "vertex: e f g e f g\n"
        "edge e: O1+ O2+\n"
        "edge f: U1+\n"
        "edge g: U2+\n");
    bouquet_presentation r = cyclic_rebase(b, 1);
    CHECK(r.vertex_word == std::vector<char>{'f', 'g', 'e', 'f', 'g', 'e'});
    // e reversed: traversal order flips, and both crossings (e against f, e
    // against g) change sign because exactly one passage reversed.
    REQUIRE(r.edges.at('e').size() == 2);
    CHECK(r.edges.at('e')[0].id == "2");
    CHECK(r.edges.at('e')[0].sign == -1);
    CHECK(r.edges.at('e')[1].id == "1");
    CHECK(r.edges.at('f')[0].sign == -1);
    gauss_diagram d = compile_bouquet(r);
    CHECK(validate(d).empty());
}

TEST_CASE("serialization round-trips") {
    bouquet_presentation b = parse_bouquet(
        "bouquet\n"
        "vertex: e f g e f g\n"
        "edge e: O1+ U2+\n"
        "edge f: U1+ O3-\n"
        "edge g: O2+ U3-\n");
    CHECK(parse_bouquet(serialize_bouquet(b)) == b);
}
