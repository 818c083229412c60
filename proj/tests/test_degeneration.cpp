#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "nilorb/degeneration.hpp"

using namespace nilorb;

static Orbit orb(const char* alg, const char* p) {
    return make_orbit(parse_algebra(alg), parse_partition(p));
}

TEST_CASE("minimal degeneration of the sp30 pair") {
    MinimalDegeneration md = minimal_degeneration(parse_partition("10,8,4,3,3,1,1"),
                                                  parse_partition("10,6,6,3,3,1,1"));
    CHECK(md.kind == DegCase::b);
    CHECK(md.k == 2);
    CHECK(md.q == 2);
    CHECK(md.m == 2);
    CHECK(md.d_m == 2);
    CHECK(md.alpha_prime == parse_partition("4"));
    CHECK(md.beta_prime == parse_partition("2,2"));
    CHECK(closure_singularity(md).to_string() == "A3");  // D_3 normalized to A_3
}

TEST_CASE("five Kraft-Procesi shapes") {
    // (a)
    MinimalDegeneration a = minimal_degeneration(parse_partition("4,4,3,1"),
                                                 parse_partition("4,4,2,2"));
    CHECK(a.kind == DegCase::a);
    CHECK(a.m == 3);
    CHECK(a.d_m == 1);
    CHECK(closure_singularity(a).to_string() == "A1");

    // (b) with k > 2 keeps type D
    MinimalDegeneration b = minimal_degeneration(parse_partition("6"), parse_partition("4,2"));
    CHECK(b.kind == DegCase::b);
    CHECK(b.k == 3);
    CHECK(closure_singularity(b) == ClosureSingularity{ClosureSingularity::Kind::KleinianD, 4});

    // (c)
    MinimalDegeneration c = minimal_degeneration(parse_partition("5"), parse_partition("3,1,1"));
    CHECK(c.kind == DegCase::c);
    CHECK(c.k == 2);
    CHECK(c.m == c.q);
    CHECK(closure_singularity(c).to_string() == "A3");

    // (d): singular row is q + 1
    MinimalDegeneration d = minimal_degeneration(parse_partition("3,3"), parse_partition("2,2,2"));
    CHECK(d.kind == DegCase::d);
    CHECK(d.k == 1);
    CHECK(d.q == 1);
    CHECK(d.m == 2);
    CHECK(closure_singularity(d).to_string() == "A1");

    // (e): non-normal union, singular row q + 1
    MinimalDegeneration e = minimal_degeneration(parse_partition("2,2"),
                                                 parse_partition("1,1,1,1"));
    CHECK(e.kind == DegCase::e);
    CHECK(e.k == 1);
    CHECK(e.m == 2);
    ClosureSingularity cs = closure_singularity(e);
    CHECK(cs.non_normal_union());
    CHECK(cs.to_string() == "A1 ∪ A1");

    CHECK_THROWS_AS(minimal_degeneration(parse_partition("6,2"), parse_partition("2,2,2,2")),
                    std::domain_error);
}

TEST_CASE("degeneration_at moves one box and collapses") {
    Algebra sp30 = Algebra::sp(30);
    Partition alpha = parse_partition("10,8,4,3,3,1,1");
    CHECK(degeneration_at(alpha, 1, sp30) == parse_partition("9,9,4,3,3,1,1"));
    CHECK(degeneration_at(alpha, 2, sp30) == parse_partition("10,6,6,3,3,1,1"));
    CHECK(degeneration_at(alpha, 5, sp30) == parse_partition("10,8,4,2,2,2,2"));
    CHECK_THROWS_AS(degeneration_at(alpha, 3, sp30), std::invalid_argument);
}

TEST_CASE("codim2_children on the sp30 example") {
    auto kids = codim2_children(orb("sp30", "10,8,4,3,3,1,1"));
    REQUIRE(kids.size() == 3);
    // descending lexicographic by child partition
    CHECK(kids[0].child.partition == parse_partition("10,8,4,2,2,2,2"));
    CHECK(kids[0].md.kind == DegCase::e);
    CHECK(kids[0].md.q == 4);
    CHECK(kids[1].child.partition == parse_partition("10,6,6,3,3,1,1"));
    CHECK(kids[1].md.kind == DegCase::b);
    CHECK(kids[2].child.partition == parse_partition("9,9,4,3,3,1,1"));
    CHECK(kids[2].md.kind == DegCase::a);
}

TEST_CASE("brute and constructive paths agree") {
    for (const char* fixture : {"so8:5,3", "sp8:4,2,2", "so9:5,2,2", "sp6:2,2,2"}) {
        std::string s(fixture);
        auto pos = s.find(':');
        Orbit o = orb(s.substr(0, pos).c_str(), s.substr(pos + 1).c_str());
        auto brute = codim2_children(o, /*brute_bound=*/40);
        auto fast = codim2_children(o, /*brute_bound=*/0);
        REQUIRE(brute.size() == fast.size());
        for (size_t i = 0; i < brute.size(); ++i)
            CHECK(brute[i].child.partition == fast[i].child.partition);
    }
}

TEST_CASE("leaf of the closure has no codim-2 children") {
    CHECK(codim2_children(orb("sp4", "1,1,1,1")).empty());
    CHECK(codim2_children(orb("so7", "1,1,1,1,1,1,1")).empty());
}
