#include <doctest.h>

#include "trilink/gauss_code.hpp"
#include "trilink/invariants.hpp"
#include "trilink/moves.hpp"
#include "trilink/verify.hpp"

using namespace trilink;

namespace {

const move_table& table() {
    static move_table t = move_table::load_file(std::string(TRILINK_DATA_DIR) + "/moves.txt");
    return t;
}

}  // namespace

TEST_CASE("move table loads with the full oriented variant set") {
    int r1 = 0, r2 = 0, r3 = 0;
    for (const move_variant& v : table().all()) {
        if (v.kind == move_kind::r1) ++r1;
        if (v.kind == move_kind::r2) ++r2;
        if (v.kind == move_kind::r3) ++r3;
    }
    CHECK(r1 == 4);
    CHECK(r2 == 4);
    CHECK(r3 == 8);
}

TEST_CASE("move table rejects a non-planar R3 row") {
    // O3.ppp with the M strand order flipped on one side only
    const char* bad =
        "move O3.bad\n"
        "left:\n"
        "  strand H: a b\n"
        "  strand M: d c\n"  // inconsistent with all-plus signs
        "  strand L: e f\n"
        "  arrow a -> c +\n"
        "  arrow b -> e +\n"
        "  arrow d -> f +\n"
        "right:\n"
        "  strand H: b a\n"
        "  strand M: c d\n"
        "  strand L: f e\n"
        "  arrow a -> c +\n"
        "  arrow b -> e +\n"
        "  arrow d -> f +\n";
    CHECK_THROWS_WITH_AS(move_table::parse(bad), doctest::Contains("planar"),
                         std::runtime_error);
}

TEST_CASE("R2 insertion sites on the unlink exclude coincident gaps") {
    move_spec ins{&table().at("O2.sp"), false};
    auto sites = enumerate_sites(empty_diagram(3), ins);
    CHECK(sites.size() == 6);  // 3 gaps x 3 gaps minus the 3 diagonal pairs
}

TEST_CASE("R2 deletion sites on the unlink are empty") {
    move_spec del{&table().at("O2.sp"), true};
    CHECK(enumerate_sites(empty_diagram(3), del).empty());
}

TEST_CASE("R1 insertion on an empty based component has exactly one gap") {
    gauss_diagram d = empty_diagram(1);
    move_spec ins{&table().at("O1.pt"), false};
    auto sites = enumerate_sites(d, ins);
    CHECK(sites.size() == 1);
    CHECK(sites[0].gaps[0] == std::pair{1, 0});
}

TEST_CASE("insert-then-delete is the identity for R1 and R2") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        gauss_diagram d = random_diagram(seed, 3);
        for (const move_variant& v : table().all()) {
            if (v.kind == move_kind::r3) continue;
            move_spec ins{&v, false};
            auto sites = enumerate_sites(d, ins);
            REQUIRE_FALSE(sites.empty());
            const move_site& site = sites[seed % sites.size()];
            gauss_diagram mid = apply_move(d, ins, site);
            CHECK(validate(mid).empty());
            int delta = mid.arrow_count() - d.arrow_count();
            CHECK(delta == (v.kind == move_kind::r1 ? 1 : 2));

            move_spec del{&v, true};
            bool restored = false;
            for (const move_site& s2 : enumerate_sites(mid, del))
                if (equivalent(apply_move(mid, del, s2), d)) restored = true;
            CHECK(restored);
        }
    }
}

TEST_CASE("R3 applies exactly once on its planted fragment and is an involution") {
    for (const move_variant& v : table().all()) {
        if (v.kind != move_kind::r3) continue;
        // bare fragment: context 0 arrows
        gauss_diagram d = plant_r3_fragment(7, v, false, 0);
        REQUIRE(validate(d).empty());
        move_spec fwd{&v, false};
        auto sites = enumerate_sites(d, fwd);
        REQUIRE(sites.size() == 1);
        gauss_diagram after = apply_move(d, fwd, sites[0]);
        CHECK(validate(after).empty());
        CHECK(after.arrow_count() == d.arrow_count());

        // arrows keep their (component pair, sign) data
        for (const arrow& a : d.arrows) {
            int idx = after.find_arrow(a.id);
            REQUIRE(idx >= 0);
            CHECK(after.arrows[idx].sign == a.sign);
            CHECK(after.arrows[idx].tail.component == a.tail.component);
            CHECK(after.arrows[idx].head.component == a.head.component);
        }

        move_spec back{&v, true};
        auto back_sites = enumerate_sites(after, back);
        REQUIRE(back_sites.size() == 1);
        CHECK(apply_move(after, back, back_sites[0]) == d);
    }
}

TEST_CASE("stale sites are rejected") {
    gauss_diagram d = random_diagram(3, 2);
    move_spec ins{&table().at("O1.pt"), false};
    move_site bogus{{{1, 99}}, {}};
    CHECK_THROWS_AS(apply_move(d, ins, bogus), std::invalid_argument);
    move_spec del{&table().at("O1.pt"), true};
    move_site missing{{}, {"nope"}};
    CHECK_THROWS_AS(apply_move(d, del, missing), std::invalid_argument);
}

TEST_CASE("random_walk: determinism, validity, zero steps") {
    std::vector<move_spec> allowed;
    for (const move_variant& v : table().all()) {
        allowed.push_back(move_spec{&v, false});
        allowed.push_back(move_spec{&v, true});
    }
    gauss_diagram start = empty_diagram(3);
    auto w0 = random_walk(99, 0, allowed, start, table());
    CHECK(w0.size() == 1);
    CHECK(w0[0] == start);

    auto w1 = random_walk(42, 12, allowed, start, table());
    auto w2 = random_walk(42, 12, allowed, start, table());
    CHECK(w1.size() == 13);
    for (size_t i = 0; i < w1.size(); ++i) {
        CHECK(w1[i] == w2[i]);
        CHECK(validate(w1[i]).empty());
    }
    auto w3 = random_walk(43, 12, allowed, start, table());
    bool differs = false;
    for (size_t i = 0; i < w1.size(); ++i)
        if (!(w1[i] == w3[i])) differs = true;
    CHECK(differs);
}

TEST_CASE("one-sided linking counts are invariant under every move") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        gauss_diagram d = random_diagram(seed, 5);
        for (const move_variant& v : table().all())
            for (bool inverse : {false, true}) {
                move_spec spec{&v, inverse};
                auto sites = enumerate_sites(d, spec);
                if (sites.empty()) continue;
                gauss_diagram after = apply_move(d, spec, sites[0]);
                for (int i = 1; i <= 3; ++i)
                    for (int j = 1; j <= 3; ++j)
                        if (i != j)
                            CHECK(linking_number(after, i, j) == linking_number(d, i, j));
            }
    }
}
