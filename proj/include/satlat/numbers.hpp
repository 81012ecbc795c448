#pragma once

// Exact arithmetic support: arbitrary-precision integers/rationals, a few
// integer functions (ceil-div, binomials, roots), and certified rational
// brackets for log2 so transcendental comparisons can be settled exactly.

#include <boost/multiprecision/cpp_int.hpp>

namespace satlat {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

BigInt ceil_div(const BigInt& a, const BigInt& b);  // b > 0, a >= 0

// floor(log2 k) = index of the most significant bit; k >= 1.
int floor_log2(const BigInt& k);
bool is_power_of_two(const BigInt& k);  // k >= 1

BigInt binomial(const BigInt& n, const BigInt& r);
// C(d, floor(d/2)); memoised, safe under concurrent use.
BigInt central_binomial(int d);

// floor(x^(1/r)) for x >= 0, r >= 1, by integer Newton iteration.
BigInt iroot_floor(const BigInt& x, unsigned r);
BigInt isqrt_ceil(const BigInt& x);

BigInt floor_rational(const ExactRational& x);
BigInt ceil_rational(const ExactRational& x);

struct RationalInterval {
  ExactRational lo, hi;
  bool exact() const { return lo == hi; }
};

// Certified bracket lo <= log2(k) <= hi of width 1/q (exact for powers of
// two): with p = floor(log2(k^q)), 2^p <= k^q < 2^(p+1) gives p/q and
// (p+1)/q.  Requires k >= 1, q >= 1.
RationalInterval log2_bracket(const BigInt& k, unsigned q);

// Same bracket for a positive rational, via log2(a/b) = log2 a - log2 b.
RationalInterval log2_bracket(const ExactRational& x, unsigned q);

}  // namespace satlat
