#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "nilorb/partition.hpp"

using namespace nilorb;

TEST_CASE("parse_algebra") {
    CHECK(parse_algebra("so15") == Algebra::so(15));
    CHECK(parse_algebra("sp30") == Algebra::sp(30));
    CHECK_THROWS_AS(parse_algebra("xx7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("sp7"), std::invalid_argument);  // odd sp
    CHECK_THROWS_AS(parse_algebra("so-2"), std::invalid_argument);
}

TEST_CASE("algebra dimensions and names") {
    CHECK(Algebra::so(15).dim() == 105);
    CHECK(Algebra::sp(30).dim() == 465);
    CHECK(Algebra::so(15).rank() == 7);
    CHECK(Algebra::sp(30).rank() == 15);
    CHECK(Algebra::so(6).name() == "so6");
    CHECK(Algebra::sp(4).name() == "sp4");
    CHECK(Algebra::so(9).parity() == 1);
    CHECK(Algebra::sp(8).parity() == -1);
}

TEST_CASE("parse_partition and to_string") {
    Partition p = parse_partition("10,8,4,3,3,1,1");
    CHECK(p.rows() == 7);
    CHECK(p.sum() == 30);
    CHECK(p.at(1) == 10);
    CHECK(p.at(8) == 0);  // 1-based, zero beyond length
    CHECK(p.to_string() == "10,8,4,3,3,1,1");
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("0").empty());
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);   // increasing
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,-1"), std::invalid_argument);
}

TEST_CASE("validity and explain_invalid") {
    CHECK(is_valid(parse_partition("10,8,4,3,3,1,1"), Algebra::sp(30)));
    CHECK(is_valid(parse_partition("5,2,2"), Algebra::so(9)));
    CHECK_FALSE(is_valid(parse_partition("4,3,3,2"), Algebra::so(12)));
    auto why = explain_invalid(parse_partition("4,3,3,2"), Algebra::so(12));
    REQUIRE(why.has_value());
    CHECK(*why == "even part 4 occurs once");
    CHECK(explain_invalid(parse_partition("3,3"), Algebra::so(6)) == std::nullopt);
    // size mismatch
    CHECK_FALSE(is_valid(parse_partition("3,3"), Algebra::so(8)));
    // odd part with odd multiplicity in sp
    CHECK_FALSE(is_valid(parse_partition("3,2,1"), Algebra::sp(6)));
}

TEST_CASE("transpose is an involution") {
    Partition p = parse_partition("10,8,4,3,3,1,1");
    CHECK(transpose(p) == parse_partition("7,5,5,3,2,2,2,2,1,1"));
    CHECK(transpose(transpose(p)) == p);
    CHECK(transpose(Partition{}) == Partition{});
}

TEST_CASE("dominance order") {
    Partition a = parse_partition("4,2");
    Partition b = parse_partition("3,3");
    Partition c = parse_partition("2,2,1,1");
    CHECK(dominates(a, b));
    CHECK(strictly_dominates(a, b));
    CHECK_FALSE(dominates(b, a));
    CHECK(dominates(b, c));
    CHECK(dominates(a, a));
    CHECK_FALSE(strictly_dominates(a, a));
    CHECK_THROWS_AS(dominates(a, parse_partition("3,3,3")), std::invalid_argument);
}

TEST_CASE("descending lexicographic comparison") {
    CHECK(parse_partition("4,2") > parse_partition("3,3"));
    CHECK(parse_partition("3,3") > parse_partition("3,2,1"));
    CHECK(parse_partition("2,2") < parse_partition("4"));
}

TEST_CASE("very even partitions") {
    CHECK(is_very_even(parse_partition("4,4"), Algebra::so(8)));
    CHECK(is_very_even(parse_partition("2,2,2,2"), Algebra::so(8)));
    CHECK_FALSE(is_very_even(parse_partition("3,3,1,1"), Algebra::so(8)));
    CHECK_FALSE(is_very_even(parse_partition("2,2"), Algebra::sp(4)));  // type C
}

TEST_CASE("singular set and gap_half") {
    Partition p = parse_partition("10,8,4,3,3,1,1");
    auto s = singular_set(p);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == SingularData{1, 1});
    CHECK(s[1] == SingularData{2, 2});
    CHECK(s[2] == SingularData{5, 1});
    CHECK(gap_half(p, 2) == 2);
    CHECK(gap_half(p, 3) == 0);
    CHECK(gap_half(p, 7) == 0);  // last row, implicit zero below
    CHECK(singular_set(parse_partition("2,2,1,1")).empty());
}

TEST_CASE("special rows") {
    CHECK(special_row(parse_partition("3,3"), Algebra::so(6)) == 1);
    CHECK(special_row(parse_partition("2,2,1,1"), Algebra::so(6)) == 3);
    CHECK(special_row(parse_partition("5,1"), Algebra::so(6)) == std::nullopt);
    CHECK(special_row(parse_partition("4,4,3,1"), Algebra::so(12)) == std::nullopt);
    // type B and C are never special
    CHECK(special_row(parse_partition("3,3,1"), Algebra::so(7)) == std::nullopt);
    CHECK(special_row(parse_partition("2,2"), Algebra::sp(4)) == std::nullopt);
    // the zero orbit is a point
    CHECK(special_row(parse_partition("1,1"), Algebra::so(2)) == std::nullopt);
}

TEST_CASE("add_two_rows pads with zero rows") {
    CHECK(add_two_rows(parse_partition("2,2,1,1"), 3) == std::vector<int>{4, 4, 3, 1});
    CHECK(add_two_rows(parse_partition("3"), 2) == std::vector<int>{5, 2});
    CHECK(add_two_rows(Partition{}, 3) == std::vector<int>{2, 2, 2});
}

TEST_CASE("collapse_down") {
    CHECK(collapse_down({2, 2, 2}, Algebra::so(6)) == parse_partition("2,2,1,1"));
    CHECK(collapse_down({4, 2}, Algebra::so(6)) == parse_partition("3,3"));
    CHECK(collapse_down({9, 4, 2}, Algebra::so(15)) == parse_partition("9,3,3"));
    // already valid: identity
    CHECK(collapse_down({3, 3}, Algebra::so(6)) == parse_partition("3,3"));
    CHECK(collapse_down({3, 1}, Algebra::sp(4)) == parse_partition("2,2"));
    CHECK_THROWS_AS(collapse_down({2, 2}, Algebra::so(6)), std::invalid_argument);
}

TEST_CASE("add_two_then_collapse") {
    // no collapse needed
    CHECK(add_two_then_collapse(parse_partition("2,2,1,1"), 3, Algebra::so(12)) ==
          parse_partition("4,4,3,1"));
    // one-step collapse branch
    CHECK(add_two_then_collapse(Partition{}, 3, Algebra::so(6)) == parse_partition("2,2,1,1"));
    CHECK(add_two_then_collapse(parse_partition("7,2,2"), 2, Algebra::so(15)) ==
          parse_partition("9,3,3"));
    CHECK_THROWS_AS(add_two_then_collapse(parse_partition("3,1"), 5, Algebra::so(6)),
                    std::invalid_argument);
}
