#pragma once

// Closed-form bounds on saturation numbers, their slope (per-n growth)
// comparison, and the exact crossover search.  Everything is exact: integer
// formulas use BigInt, slope comparisons use rationals, and quantities
// involving log2 go through certified rational brackets refined until the
// comparison at hand is decided.

#include <optional>
#include <string>
#include <vector>

#include "satlat/numbers.hpp"

namespace satlat {

// Largest d >= 1 with C(d, floor(d/2)) <= j - 1; d*(1) = d*(2) = 1 by
// convention.  This is the widest gap a chain may carry at colour level j.
int d_star(const BigInt& j);

enum class BoundKind { lower, upper, exact, approx };

const char* to_string(BoundKind k);

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::lower;
  std::optional<BigInt> value;  // absent for display-only approximations
  std::string display;          // decimal text for approx entries
  std::string condition;        // applicability condition, human-readable
  bool applicable = true;
};

struct BoundReport {
  std::string target;
  BigInt n;
  std::optional<BigInt> k;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
  // max applicable lower / min applicable upper (exact counts as both).
  std::optional<BigInt> best_lower() const;
  std::optional<BigInt> best_upper() const;
};

// k * ceil(n / (floor(log2 k) + 1)) - k + 2; requires k >= 3, n >= k.
BigInt bound_a(const BigInt& k, const BigInt& n);
// 2n + sum_{j=3}^{k} ceil(n / d*(j)) - k + 2, grouped over the O(log k)
// levels where d*(j) is constant; same preconditions.
BigInt bound_b(const BigInt& k, const BigInt& n);

// sum_{j=3}^{k} 1 / d*(j), grouped the same way; k >= 3.
ExactRational sum_inverse_d_star(const BigInt& k);

// All antichain-target bounds for antichain on k+1 elements in B_n;
// requires k >= 3, n >= k.
BoundReport antichain_bounds(const BigInt& k, const BigInt& n);

// floor((1 - 1/log2 k) * k * n / log2 k), certified; k >= 3, not required
// to be below bound_a.
BigInt main_bound_floor(const BigInt& k, const BigInt& n);

// ceil((log2 k)^3), certified; k >= 2.
BigInt inequality_threshold(const BigInt& k);

// Certified check that bound_a(k, n) >= (1 - 1/log2 k) * k * n / log2 k.
// Requires k >= 3 and n >= inequality_threshold(k); errors below it.
bool verify_inequality_a(const BigInt& k, const BigInt& n);

struct SlopeComparison {
  ExactRational slope_a;  // k / (floor(log2 k) + 1)
  ExactRational slope_b;  // 2 + sum_{j=3}^{k} 1/d*(j)
  char winner = 'b';      // 'a' | 'b' | '=' (larger slope wins)
};

SlopeComparison slope_compare(const BigInt& k);  // k >= 3

// Least k in [3, k_max] with slope_a(k) > slope_b(k), or absent.  The
// breakpoint walk is exact and touches only the O(log k_max) points where
// either slope changes its linear piece.
std::optional<BigInt> crossover(const BigInt& k_max);
// Term-by-term oracle for the same question; k_max <= 10^6.
std::optional<BigInt> crossover_scan(const BigInt& k_max);

// Reference formulas for a named target: "v2" | "diamond" | "butterfly" |
// "chain:m" | "antichain:m" (m = poset size; antichain entries are induced-
// saturation statements, chain entries are weak-saturation statements, and
// for chains the two notions coincide).
BoundReport reference_bounds(const std::string& descriptor, const BigInt& n);

// Fixed-point decimal rendering of a rational (round half away from zero).
std::string decimal_string(const ExactRational& x, int digits);

}  // namespace satlat
