#include <stdexcept>
#include <algorithm>

#include "doctest.h"
#include "satlat/lattice.hpp"

using namespace satlat;

TEST_CASE("full_mask covers the ground range and rejects the rest") {
  CHECK(full_mask(1) == 0x1u);
  CHECK(full_mask(3) == 0x7u);
  CHECK(full_mask(24) == 0xFFFFFFu);
  CHECK_THROWS_AS(full_mask(0), std::invalid_argument);
  CHECK_THROWS_AS(full_mask(25), std::invalid_argument);
  CHECK_THROWS_AS(full_mask(-1), std::invalid_argument);
}

TEST_CASE("relations agree with definitions on every pair of B_4") {
  for (Mask a = 0; a < 16; ++a) {
    for (Mask b = 0; b < 16; ++b) {
      const bool sub = (a & ~b) == 0;
      const bool sup = (b & ~a) == 0;
      CHECK(is_subset_of(a, b) == sub);
      CHECK(incomparable(a, b) == (!sub && !sup));
      const Relation r = compare(a, b);
      if (a == b)
        CHECK(r == Relation::equal);
      else if (sub)
        CHECK(r == Relation::subset);
      else if (sup)
        CHECK(r == Relation::superset);
      else
        CHECK(r == Relation::incomparable);
    }
  }
}

TEST_CASE("strict containment is transitive across all B_4 triples") {
  for (Mask a = 0; a < 16; ++a)
    for (Mask b = 0; b < 16; ++b)
      for (Mask c = 0; c < 16; ++c)
        if (is_strict_subset(a, b) && is_strict_subset(b, c))
          CHECK(is_strict_subset(a, c));
}

TEST_CASE("subset order embeds into mask order") {
  for (Mask a = 0; a < 32; ++a)
    for (Mask b = 0; b < 32; ++b)
      if (is_strict_subset(a, b)) CHECK(a < b);
}

TEST_CASE("bitstrings put ground element 1 leftmost") {
  CHECK(to_bitstring(0, 3) == "000");
  CHECK(to_bitstring(3, 3) == "110");
  CHECK(to_bitstring(4, 3) == "001");
  CHECK(mask_from_bitstring("110", 3) == Mask{3});
  CHECK(mask_from_bitstring("001", 3) == Mask{4});
  CHECK_FALSE(mask_from_bitstring("01", 3));
  CHECK_FALSE(mask_from_bitstring("0120", 4));
  CHECK_FALSE(mask_from_bitstring("", 1));
}

TEST_CASE("set notation lists elements") {
  CHECK(to_set_notation(0) == "{}");
  CHECK(to_set_notation(5) == "{1,3}");
  CHECK(to_set_notation(7) == "{1,2,3}");
}

TEST_CASE("open interval of a 3-cube has 6 members in ascending order") {
  const auto v = open_interval(0, 7);
  CHECK(v == std::vector<Mask>{1, 2, 3, 4, 5, 6});
  const auto w = open_interval(1, 11);  // {1} .. {1,2,4}
  CHECK(w == std::vector<Mask>{3, 9});
  CHECK(open_interval(3, 7) == std::vector<Mask>{});
  CHECK_THROWS_AS(open_interval(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(open_interval(2, 1), std::invalid_argument);
}

TEST_CASE("streamed interval matches the materialised one") {
  for (auto [x, y] : {std::pair<Mask, Mask>{0, 15}, {1, 11}, {0, 31}, {4, 5}}) {
    std::vector<Mask> seen;
    for_each_in_open_interval(x, y, [&](Mask z) { seen.push_back(z); });
    CHECK(seen == open_interval(x, y));
  }
}

TEST_CASE("cube dimension is the popcount difference of nested sets") {
  CHECK(cube_dimension(0, 0) == 0);
  CHECK(cube_dimension(0, 7) == 3);
  CHECK(cube_dimension(5, 7) == 1);
  CHECK_THROWS_AS(cube_dimension(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(cube_dimension(1, 2), std::invalid_argument);
}
