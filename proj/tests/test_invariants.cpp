#include <doctest.h>

#include "trilink/gauss_code.hpp"
#include "trilink/invariants.hpp"
#include "trilink/verify.hpp"

using namespace trilink;

TEST_CASE("reduce_mod conventions") {
    invariant_value v = reduce_mod(7, {0, 0, 0});
    CHECK(v.modulus == 0);
    CHECK(v.raw == rational(7));

    v = reduce_mod(7, {4, 6, 0});
    CHECK(v.modulus == 2);
    CHECK(v.residue == 1);

    v = reduce_mod(-5, {3, 3, 3});
    CHECK(v.modulus == 3);
    CHECK(v.residue == 1);
}

TEST_CASE("linking_number basics") {
    CHECK(linking_number(unlink3_diagram(), 1, 2) == 0);
    gauss_diagram hopf = hopf_plus_sublink_diagram();
    CHECK(linking_number(hopf, 1, 2) == 1);
    CHECK(linking_number(hopf, 2, 1) == 1);
    CHECK(linking_number(mirror(hopf), 1, 2) == -1);
    CHECK(pair_count(hopf, 1, 2) == 2);
    CHECK_THROWS_AS(linking_number(hopf, 2, 2), std::invalid_argument);
}
