#include "satlat/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace satlat {

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::invalid_argument("ceil_div needs a positive divisor");
  if (a < 0) throw std::invalid_argument("ceil_div needs a non-negative dividend");
  return (a + b - 1) / b;
}

int floor_log2(const BigInt& k) {
  if (k < 1) throw std::invalid_argument("log2 needs k >= 1");
  return static_cast<int>(boost::multiprecision::msb(k));
}

bool is_power_of_two(const BigInt& k) {
  if (k < 1) throw std::invalid_argument("is_power_of_two needs k >= 1");
  return (k & (k - 1)) == 0;
}

BigInt binomial(const BigInt& n, const BigInt& r) {
  if (n < 0 || r < 0) throw std::invalid_argument("binomial needs n, r >= 0");
  if (r > n) return 0;
  BigInt rr = r;
  if (rr > n - rr) rr = n - rr;
  BigInt out = 1;
  for (BigInt i = 1; i <= rr; ++i) {
    out *= n - rr + i;
    out /= i;  // exact: out is C(n - rr + i, i) after this step
  }
  return out;
}

BigInt central_binomial(int d) {
  if (d < 0) throw std::invalid_argument("central_binomial needs d >= 0");
  static std::mutex mu;
  static std::vector<BigInt> memo{1};  // C(0,0)
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= d) {
    int k = static_cast<int>(memo.size());
    memo.push_back(binomial(k, k / 2));
  }
  return memo[static_cast<size_t>(d)];
}

BigInt iroot_floor(const BigInt& x, unsigned r) {
  if (x < 0) throw std::invalid_argument("iroot_floor needs x >= 0");
  if (r == 0) throw std::invalid_argument("iroot_floor needs r >= 1");
  if (r == 1 || x < 2) return x;
  // Newton iteration from a one-too-high bit estimate; monotone descent.
  int bits = floor_log2(x) / static_cast<int>(r) + 2;
  BigInt y = BigInt(1) << bits;
  for (;;) {
    BigInt yr1 = 1;  // y^(r-1)
    for (unsigned i = 0; i + 1 < r; ++i) yr1 *= y;
    BigInt next = ((r - 1) * y + x / yr1) / r;
    if (next >= y) break;
    y = next;
  }
  // y = floor(x^(1/r)) once the descent stalls; correct the boundary.
  auto pow_r = [&](const BigInt& v) {
    BigInt out = 1;
    for (unsigned i = 0; i < r; ++i) out *= v;
    return out;
  };
  while (pow_r(y) > x) --y;
  while (pow_r(y + 1) <= x) ++y;
  return y;
}

BigInt isqrt_ceil(const BigInt& x) {
  BigInt f = iroot_floor(x, 2);
  return f * f == x ? f : f + 1;
}

BigInt floor_rational(const ExactRational& x) {
  BigInt num = numerator(x), den = denominator(x);  // den > 0 canonical
  BigInt q = num / den;                             // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_rational(const ExactRational& x) { return -floor_rational(-x); }

RationalInterval log2_bracket(const BigInt& k, unsigned q) {
  if (k < 1) throw std::invalid_argument("log2_bracket needs k >= 1");
  if (q < 1) throw std::invalid_argument("log2_bracket needs q >= 1");
  BigInt kq = 1;
  {
    // k^q by square-and-multiply; q stays small (<= 2^16 in refinement).
    BigInt base = k;
    unsigned e = q;
    while (e) {
      if (e & 1) kq *= base;
      e >>= 1;
      if (e) base *= base;
    }
  }
  const int p = floor_log2(kq);
  ExactRational lo(p, q);
  if ((BigInt(1) << p) == kq)
    return {lo, lo};  // k is a power of two: the bracket is exact
  return {lo, ExactRational(p + 1, q)};
}

RationalInterval log2_bracket(const ExactRational& x, unsigned q) {
  if (x <= 0) throw std::invalid_argument("log2_bracket needs x > 0");
  RationalInterval a = log2_bracket(numerator(x), q);
  RationalInterval b = log2_bracket(denominator(x), q);
  return {a.lo - b.hi, a.hi - b.lo};
}

}  // namespace satlat
