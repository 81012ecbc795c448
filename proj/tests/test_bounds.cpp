#include <stdexcept>
#include "doctest.h"
#include "oracles.hpp"
#include "satlat/bounds.hpp"

using namespace satlat;

TEST_CASE("d_star agrees with its definition and known landmarks") {
  CHECK(d_star(1) == 1);
  CHECK(d_star(2) == 1);
  CHECK(d_star(3) == 2);
  CHECK(d_star(4) == 3);
  CHECK(d_star(6) == 3);
  CHECK(d_star(7) == 4);
  CHECK(d_star(11) == 5);
  CHECK(d_star(21) == 6);
  CHECK(d_star(35) == 6);
  CHECK(d_star(36) == 7);
  for (long long j = 1; j <= 2500; ++j)
    CHECK(d_star(BigInt(j)) == oracle::d_star(j));
  // C(42,21) = 538...440 <= 10^12 - 1 < C(43,21)
  CHECK(d_star(BigInt("1000000000000")) == 42);
  CHECK_THROWS_AS(d_star(0), std::invalid_argument);
}

TEST_CASE("closed-form lower bounds at the worked example") {
  CHECK(bound_a(3, 12) == 17);
  CHECK(bound_b(3, 12) == 29);
  CHECK(bound_a(4, 12) == 14);
  CHECK(bound_b(4, 12) == 32);
  CHECK_THROWS_AS(bound_a(2, 12), std::invalid_argument);
  CHECK_THROWS_AS(bound_b(3, 2), std::invalid_argument);
}

TEST_CASE("grouped summations equal term-by-term summations") {
  for (int k = 3; k <= 40; ++k) {
    for (const BigInt& n : {BigInt(k), BigInt(k + 5), BigInt(3 * k + 1)}) {
      BigInt direct = 2 * n - k + 2;
      for (int j = 3; j <= k; ++j)
        direct += ceil_div(n, oracle::d_star(j));
      CHECK(bound_b(k, n) == direct);
      CHECK(bound_a(k, n) ==
            BigInt(k) * ceil_div(n, floor_log2(k) + 1) - k + 2);
    }
  }
  ExactRational direct = 0;
  for (long long j = 3; j <= 3000; ++j) {
    direct += ExactRational(1, oracle::d_star(j));
    if (j % 97 == 0 || j <= 12)
      CHECK(sum_inverse_d_star(BigInt(j)) == direct);
  }
  CHECK(sum_inverse_d_star(3) == ExactRational(1, 2));
  CHECK(sum_inverse_d_star(8) == 2);
  CHECK(sum_inverse_d_star(243) == 32);
  CHECK_THROWS_AS(sum_inverse_d_star(2), std::invalid_argument);
}

TEST_CASE("slope comparison at pinned points") {
  SlopeComparison c = slope_compare(8);
  CHECK(c.slope_a == 2);
  CHECK(c.slope_b == 4);
  CHECK(c.winner == 'b');
  c = slope_compare(243);
  CHECK(c.slope_a == ExactRational(243, 8));
  CHECK(c.slope_b == 34);
  CHECK(c.winner == 'b');
  // the winner is not monotone in k: slope_a dips at each power of two, so
  // after the first crossover at 7947 the level-sum slope retakes the lead
  CHECK(slope_compare(7946).winner == 'b');
  CHECK(slope_compare(7947).winner == 'a');
  CHECK(slope_compare(8192).winner == 'b');
  CHECK(slope_compare(BigInt(1) << 20).winner == 'b');
  CHECK(slope_compare(BigInt(1) << 64).winner == 'a');
  CHECK_THROWS_AS(slope_compare(2), std::invalid_argument);
}

TEST_CASE("breakpoint crossover equals the term-by-term scan") {
  CHECK_FALSE(crossover(243).has_value());
  CHECK_FALSE(crossover_scan(243).has_value());
  auto walk = crossover(1000000);
  auto scan = crossover_scan(1000000);
  REQUIRE(walk.has_value());
  REQUIRE(scan.has_value());
  CHECK(*walk == *scan);
  // the winner flips exactly there
  CHECK(slope_compare(*walk).winner == 'a');
  CHECK(slope_compare(*walk - 1).winner == 'b');
  CHECK(crossover(*walk) == walk);
  CHECK_FALSE(crossover(*walk - 1).has_value());
  CHECK(crossover(BigInt(1) << 64) == walk);
  CHECK_THROWS_AS(crossover(2), std::invalid_argument);
  CHECK_THROWS_AS(crossover_scan(BigInt("1000001")), std::invalid_argument);
}

TEST_CASE("certified floor of the analytic lower bound") {
  CHECK(main_bound_floor(4, 10) == 10);  // exact at powers of two
  CHECK(main_bound_floor(3, 100) == 69);
  CHECK(main_bound_floor(16, 100) == 300);  // (3/4)*1600/4
  CHECK_THROWS_AS(main_bound_floor(2, 10), std::invalid_argument);
}

TEST_CASE("cube-of-log threshold and the certified inequality") {
  CHECK(inequality_threshold(2) == 1);
  CHECK(inequality_threshold(3) == 4);
  CHECK(inequality_threshold(4) == 8);
  CHECK(inequality_threshold(5) == 13);
  CHECK(inequality_threshold(8) == 27);
  CHECK(inequality_threshold(16) == 64);
  CHECK(inequality_threshold(1024) == 1000);
  for (const BigInt& k : {BigInt(3), BigInt(10), BigInt(100), BigInt(1024)}) {
    const BigInt t = inequality_threshold(k);
    CHECK(verify_inequality_a(k, t));
    CHECK(verify_inequality_a(k, 2 * t));
  }
  CHECK_THROWS_AS(verify_inequality_a(1024, 999), std::invalid_argument);
  CHECK_THROWS_AS(verify_inequality_a(2, 10), std::invalid_argument);
}

TEST_CASE("reference report for a 4-antichain in B_12") {
  BoundReport r = reference_bounds("antichain:4", 12);
  CHECK(r.k == BigInt(3));
  REQUIRE(r.find("bound_a") != nullptr);
  CHECK(r.find("bound_a")->value == BigInt(17));
  CHECK(r.find("bound_b")->value == BigInt(29));
  CHECK(r.find("lower_3n_minus_1")->value == BigInt(35));
  CHECK(r.find("main_lower")->value == main_bound_floor(3, 12));
  CHECK(r.best_lower() == BigInt(35));
  CHECK_FALSE(r.best_upper().has_value());  // only a display approximation
  const BoundEntry* approx = r.find("upper_approx_excess");
  REQUIRE(approx != nullptr);
  CHECK(approx->kind == BoundKind::approx);
  CHECK_FALSE(approx->value.has_value());
  CHECK_FALSE(approx->display.empty());
  CHECK(antichain_bounds(3, 12).find("bound_a")->value == BigInt(17));
}

TEST_CASE("reference brackets for the named small targets") {
  auto bracket = [](const std::string& target, const BigInt& n) {
    BoundReport r = reference_bounds(target, n);
    return std::pair(r.best_lower(), r.best_upper());
  };
  CHECK(bracket("v2", 5) == std::pair(std::optional<BigInt>(6),
                                      std::optional<BigInt>(6)));
  CHECK(bracket("antichain:2", 7).first == BigInt(8));
  CHECK(bracket("antichain:3", 3) == std::pair(std::optional<BigInt>(6),
                                               std::optional<BigInt>(6)));
  CHECK(bracket("antichain:3", 4).first == BigInt(8));
  CHECK(bracket("diamond", 16) == std::pair(std::optional<BigInt>(4),
                                            std::optional<BigInt>(17)));
  CHECK(bracket("butterfly", 3) == std::pair(std::optional<BigInt>(2),
                                             std::optional<BigInt>(8)));
  CHECK(bracket("butterfly", 4) == std::pair(std::optional<BigInt>(2),
                                             std::optional<BigInt>(13)));
  CHECK(bracket("butterfly", 8) == std::pair(std::optional<BigInt>(3),
                                             std::optional<BigInt>(43)));
  CHECK(bracket("chain:3", 5) == std::pair(std::optional<BigInt>(1),
                                           std::optional<BigInt>(2)));
  CHECK(bracket("chain:7", 5) == std::pair(std::optional<BigInt>(4),
                                           std::optional<BigInt>(32)));
  CHECK(bracket("chain:11", 5) == std::pair(std::optional<BigInt>(16),
                                            std::optional<BigInt>(512)));
  CHECK_THROWS_AS(reference_bounds("chain:2", 5), std::invalid_argument);
  CHECK_THROWS_AS(reference_bounds("chain:258", 5), std::invalid_argument);
  CHECK_THROWS_AS(reference_bounds("antichain:1", 5), std::invalid_argument);
  CHECK_THROWS_AS(reference_bounds("pentagon", 5), std::invalid_argument);
  CHECK_THROWS_AS(reference_bounds("antichain:x", 5), std::invalid_argument);
  CHECK_THROWS_AS(reference_bounds("v2", 0), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(decimal_string(ExactRational(1, 3), 4) == "0.3333");
  CHECK(decimal_string(ExactRational(2, 3), 4) == "0.6667");
  CHECK(decimal_string(ExactRational(5, 4), 1) == "1.3");
  CHECK(decimal_string(ExactRational(-5, 4), 1) == "-1.3");
  CHECK(decimal_string(ExactRational(7, 2), 0) == "4");
  CHECK(decimal_string(ExactRational(-7, 2), 0) == "-4");
  CHECK(decimal_string(ExactRational(3), 2) == "3.00");
  CHECK(decimal_string(ExactRational(-1, 1000), 2) == "0.00");
  CHECK(decimal_string(ExactRational(243, 8), 6) == "30.375000");
  CHECK_THROWS_AS(decimal_string(ExactRational(1), -1),
                  std::invalid_argument);
}
