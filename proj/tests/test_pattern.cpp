#include <doctest.h>

#include "trilink/gauss_code.hpp"
#include "trilink/pattern.hpp"
#include "trilink/verify.hpp"

using namespace trilink;

namespace {

// one free arrow from circle i to circle j
arrow_pattern single_arrow_pattern(int sign = 0) {
    arrow_pattern p;
    p.name = "single";
    p.circles.resize(3);
    p.circles[0].slot_names = {"s"};
    p.circles[1].slot_names = {"t"};
    p.arrows.push_back(pattern_arrow{sign, {0, 0}, {1, 0}});
    return p;
}

gauss_diagram double_hopf_12() {
    return parse_gauss_code(
        "link 3\n"
        "component 1*: O1+ O2+\n"
        "component 2*: U1+ U2+\n"
        "component 3*:\n");
}

}  // namespace

TEST_CASE("permutation parity") {
    CHECK(permutation_by_name("id").parity() == +1);
    CHECK(permutation_by_name("(12)").parity() == -1);
    CHECK(permutation_by_name("(123)").parity() == +1);
    CHECK(s3_even().size() == 3);
    CHECK(s3_odd().size() == 3);
}

TEST_CASE("count_pattern: empty diagram has no embeddings") {
    CHECK(count_pattern(single_arrow_pattern(), permutation{}, empty_diagram(3)) == 0);
}

TEST_CASE("count_pattern: two embeddings of a single arrow in the doubled clasp") {
    CHECK(count_pattern(single_arrow_pattern(), permutation{}, double_hopf_12()) == 2);
    // a negative sign constraint filters everything
    CHECK(count_pattern(single_arrow_pattern(-1), permutation{}, double_hopf_12()) == 0);
    // binding that sends circle i elsewhere finds nothing
    CHECK(count_pattern(single_arrow_pattern(), permutation_by_name("(12)"),
                        double_hopf_12()) == 0);
}

TEST_CASE("count_pattern: based order on the middle circle is respected") {
    // arrows 1->2 twice; pattern wants two heads on j in a fixed order from
    // two distinct sources, so it cannot embed here at all
    arrow_pattern p;
    p.name = "two_heads";
    p.circles.resize(3);
    p.circles[0].slot_names = {"s"};
    p.circles[1].slot_names = {"t1", "t2"};
    p.circles[2].slot_names = {"u"};
    p.arrows.push_back(pattern_arrow{0, {0, 0}, {1, 0}});
    p.arrows.push_back(pattern_arrow{0, {2, 0}, {1, 1}});
    CHECK(count_pattern(p, permutation{}, double_hopf_12()) == 0);

    // hand-built diagram where both orders exist once
    gauss_diagram d = parse_gauss_code(
        "link 3\n"
        "component 1*: O1+\n"
        "component 2*: U1+ U2+\n"
        "component 3*: O2+\n");
    CHECK(count_pattern(p, permutation{}, d) == 1);
    arrow_pattern q = p;
    std::swap(q.arrows[0].head.slot, q.arrows[1].head.slot);
    CHECK(count_pattern(q, permutation{}, d) == 0);  // opposite order absent
}

TEST_CASE("count_pattern agrees with the all-injections reference") {
    arrow_pattern chain;
    chain.name = "chain";
    chain.circles.resize(3);
    chain.circles[0].slot_names = {"s"};
    chain.circles[1].slot_names = {"t1", "t2"};
    chain.circles[2].slot_names = {"u"};
    chain.arrows.push_back(pattern_arrow{0, {0, 0}, {1, 0}});
    chain.arrows.push_back(pattern_arrow{0, {1, 1}, {2, 0}});

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        gauss_diagram d = random_diagram(seed, 1 + seed % 6);
        for (const permutation& s : s3())
            CHECK(count_pattern(chain, s, d) == count_pattern_all_injections(chain, s, d));
    }
}

TEST_CASE("evaluate_formula: linearity in coefficients") {
    arrow_pattern p = single_arrow_pattern();
    formula two_terms;
    two_terms.mode = summation::signed_s3;
    two_terms.terms = {formula_term{rational(1), &p}, formula_term{rational(1), &p}};
    formula one_term;
    one_term.mode = summation::signed_s3;
    one_term.terms = {formula_term{rational(2), &p}};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        gauss_diagram d = random_diagram(seed, 4);
        CHECK(evaluate_formula(two_terms, d) == evaluate_formula(one_term, d));
    }
}

TEST_CASE("evaluate_formula: signed sum equals even minus odd") {
    arrow_pattern p = single_arrow_pattern();
    formula f_signed, f_even, f_odd;
    for (formula* f : {&f_signed, &f_even, &f_odd})
        f->terms = {formula_term{rational(1), &p}};
    f_signed.mode = summation::signed_s3;
    f_even.mode = summation::even_permutations;
    f_odd.mode = summation::odd_permutations;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        gauss_diagram d = random_diagram(seed, 5);
        CHECK(evaluate_formula(f_signed, d) ==
              evaluate_formula(f_even, d) - evaluate_formula(f_odd, d));
    }
}

TEST_CASE("evaluate_formula rejects wrong component counts") {
    arrow_pattern p = single_arrow_pattern();
    formula f;
    f.terms = {formula_term{rational(1), &p}};
    gauss_diagram d = empty_diagram(2);
    CHECK_THROWS_AS(evaluate_formula(f, d), std::invalid_argument);
}

TEST_CASE("pattern file parsing and reindexing") {
    pattern_library lib = pattern_library::parse(
        "# sample\n"
        "pattern x_ijk\n"
        "circle i*: s\n"
        "circle j*: t1 t2\n"
        "circle k*: u\n"
        "arrow s -> t1\n"
        "arrow t2 -> u -\n");
    const arrow_pattern& x = lib.at("x_ijk");
    CHECK(validate_pattern(x).empty());
    CHECK(x.arrows.size() == 2);
    CHECK(x.arrows[1].sign == -1);
    CHECK(x.circles[1].based);

    arrow_pattern swapped = reindex_ikswap(x, "x_kji");
    CHECK(swapped.circles[0].slot_names == std::vector<std::string>{"u"});
    CHECK(same_geometry(reindex_ikswap(swapped, "back"), x));
    CHECK_FALSE(same_geometry(swapped, x));

    CHECK_THROWS(lib.at("missing"));
    CHECK_THROWS(pattern_library::parse("pattern p\ncircle z*: a\n"));
    CHECK_THROWS(pattern_library::parse("pattern p\ncircle i*: a a\n"));
}
