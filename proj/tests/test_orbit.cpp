#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "nilorb/orbit.hpp"

using namespace nilorb;

static Orbit orb(const char* alg, const char* p) {
    return make_orbit(parse_algebra(alg), parse_partition(p));
}

TEST_CASE("make_orbit validates") {
    CHECK_THROWS_AS(make_orbit(Algebra::so(12), parse_partition("4,3,3,2")), std::domain_error);
    CHECK(orb("so8", "4,4").very_even);
    CHECK_FALSE(orb("so8", "3,3,1,1").very_even);
}

TEST_CASE("enumerate_orbits") {
    auto sp4 = enumerate_orbits(Algebra::sp(4));
    REQUIRE(sp4.size() == 4);
    CHECK(sp4[0].partition == parse_partition("4"));
    CHECK(sp4[1].partition == parse_partition("2,2"));
    CHECK(sp4[2].partition == parse_partition("2,1,1"));
    CHECK(sp4[3].partition == parse_partition("1,1,1,1"));

    CHECK(enumerate_orbits(Algebra::so(8)).size() == 10);
    CHECK(enumerate_orbits(Algebra::so(3)).size() == 2);
    CHECK(enumerate_orbits(Algebra::so(0)).size() == 1);  // the empty orbit

    // descending lexicographic order throughout
    auto so9 = enumerate_orbits(Algebra::so(9));
    for (size_t i = 1; i < so9.size(); ++i) CHECK(so9[i - 1].partition > so9[i].partition);
}

TEST_CASE("orbit dimension") {
    CHECK(dim_orbit(orb("sp30", "10,8,4,3,3,1,1")) == 400);
    CHECK(dim_orbit(orb("so9", "5,2,2")) == 26);
    CHECK(dim_orbit(orb("so6", "3,3")) == 10);
    // regular orbit: dim g - rank
    CHECK(dim_orbit(orb("so6", "5,1")) == 12);
    CHECK(dim_orbit(orb("sp6", "6")) == 18);
    // minimal orbit of sp_2n has dimension 2n
    CHECK(dim_orbit(orb("sp8", "2,1,1,1,1,1,1")) == 8);
    // zero orbit
    CHECK(dim_orbit(orb("so7", "1,1,1,1,1,1,1")) == 0);
}

TEST_CASE("equivariant fundamental group") {
    CHECK(pi1_adjoint(orb("sp30", "10,8,4,3,3,1,1")).exponent == 2);
    CHECK(pi1_adjoint(orb("sp4", "2,2")).exponent == 1);
    CHECK(pi1_adjoint(orb("sp4", "2,1,1")).exponent == 0);
    CHECK(pi1_adjoint(orb("so9", "5,2,2")).exponent == 0);
    CHECK(pi1_adjoint(orb("so8", "3,3,1,1")).exponent == 1);
    CHECK(pi1_adjoint(orb("so8", "5,3")).exponent == 0);
    CHECK(pi1_adjoint(orb("so6", "2,2,1,1")).exponent == 0);
    CHECK(pi1_adjoint(orb("sp22", "4,4,4,2,2,2,2,2")).exponent == 1);
}

TEST_CASE("H^2 of the orbit") {
    CHECK(h2_orbit(orb("so6", "3,3")) == 1);
    CHECK(h2_orbit(orb("so6", "2,2,1,1")) == 1);
    CHECK(h2_orbit(orb("so12", "4,4,3,1")) == 0);
    CHECK(h2_orbit(orb("so9", "5,2,2")) == 0);
    CHECK(h2_orbit(orb("sp4", "2,2")) == 0);
    CHECK(h2_orbit(orb("so2", "1,1")) == 0);  // a point
}

TEST_CASE("H^2 of the universal cover") {
    // counts values of multiplicity exactly 2 with parity opposite to the algebra
    CHECK(h2_universal_cover(orb("sp30", "10,8,4,3,3,1,1")) == 0);
    CHECK(h2_universal_cover(orb("sp4", "2,2")) == 1);
    CHECK(h2_universal_cover(orb("so6", "3,3")) == 1);
    CHECK(h2_universal_cover(orb("so9", "5,2,2")) == 0);
    CHECK(h2_universal_cover(orb("sp12", "4,4,2,2")) == 2);
    CHECK(h2_universal_cover(orb("so8", "3,3,1,1")) == 2);
    // trivial pi_1: cover equals the orbit
    CHECK(h2_universal_cover(orb("so6", "2,2,1,1")) == h2_orbit(orb("so6", "2,2,1,1")));
}
