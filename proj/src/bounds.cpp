#include "satlat/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace satlat {

int d_star(const BigInt& j) {
  if (j < 1) throw std::invalid_argument("d_star needs j >= 1");
  if (j <= 2) return 1;
  int d = 1;
  while (central_binomial(d + 1) <= j - 1) ++d;
  return d;
}

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
    case BoundKind::approx: return "approx";
  }
  return "?";
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<BigInt> BoundReport::best_lower() const {
  std::optional<BigInt> best;
  for (const auto& e : entries) {
    if (!e.applicable || !e.value) continue;
    if (e.kind != BoundKind::lower && e.kind != BoundKind::exact) continue;
    if (!best || *e.value > *best) best = *e.value;
  }
  return best;
}

std::optional<BigInt> BoundReport::best_upper() const {
  std::optional<BigInt> best;
  for (const auto& e : entries) {
    if (!e.applicable || !e.value) continue;
    if (e.kind != BoundKind::upper && e.kind != BoundKind::exact) continue;
    if (!best || *e.value < *best) best = *e.value;
  }
  return best;
}

namespace {

void require_antichain_args(const BigInt& k, const BigInt& n) {
  if (k < 3) throw std::invalid_argument("antichain bounds need k >= 3");
  if (n < k) throw std::invalid_argument("antichain bounds need n >= k");
}

// Non-empty bracket sanity before a report leaves the module.
void validate_report(const BoundReport& r) {
  auto lo = r.best_lower(), hi = r.best_upper();
  if (lo && hi && *lo > *hi)
    throw std::logic_error("bound report bracket is empty for " + r.target);
}

}  // namespace

BigInt bound_a(const BigInt& k, const BigInt& n) {
  require_antichain_args(k, n);
  BigInt t1 = floor_log2(k) + 1;
  return k * ceil_div(n, t1) - k + 2;
}

BigInt bound_b(const BigInt& k, const BigInt& n) {
  require_antichain_args(k, n);
  // Group j in [3, k] by the level d = d*(j), constant on
  // [C(d,d/2)+1, C(d+1,(d+1)/2)].
  BigInt sum = 0;
  for (int d = 2;; ++d) {
    BigInt first = central_binomial(d) + 1;
    BigInt last = central_binomial(d + 1);
    if (first < 3) first = 3;
    if (last > k) last = k;
    if (first > k) break;
    if (first > last) continue;
    sum += (last - first + 1) * ceil_div(n, d);
  }
  return 2 * n + sum - k + 2;
}

ExactRational sum_inverse_d_star(const BigInt& k) {
  if (k < 3) throw std::invalid_argument("sum_inverse_d_star needs k >= 3");
  ExactRational sum = 0;
  for (int d = 2;; ++d) {
    BigInt first = central_binomial(d) + 1;
    BigInt last = central_binomial(d + 1);
    if (first < 3) first = 3;
    if (last > k) last = k;
    if (first > k) break;
    if (first > last) continue;
    sum += ExactRational(last - first + 1, d);
  }
  return sum;
}

std::string decimal_string(const ExactRational& x, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  ExactRational scaled = x * scale;
  BigInt num = numerator(scaled), den = denominator(scaled);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt q = num / den, r = num % den;
  if (2 * r >= den) ++q;  // round half away from zero
  std::string body = q.str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits)
      body.insert(0, static_cast<size_t>(digits) - body.size() + 1, '0');
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  return (neg && q != 0) ? "-" + body : body;
}

BigInt main_bound_floor(const BigInt& k, const BigInt& n) {
  if (k < 3) throw std::invalid_argument("main bound needs k >= 3");
  if (n < 1) throw std::invalid_argument("main bound needs n >= 1");
  // Value (1 - 1/L) k n / L with L = log2 k: bracket L, evaluate the
  // monotone pieces on interval ends, refine until the floor is pinned.
  // For k a power of two the bracket is a point and one pass decides; for
  // other k the value is irrational, so the floors eventually agree.
  for (unsigned q = 32;; q *= 2) {
    RationalInterval L = log2_bracket(k, q);
    ExactRational lo = ExactRational(k * n) * (L.lo - 1) / (L.hi * L.hi);
    ExactRational hi = ExactRational(k * n) * (L.hi - 1) / (L.lo * L.lo);
    BigInt flo = floor_rational(lo), fhi = floor_rational(hi);
    if (L.exact() || flo == fhi) return flo;
    if (q > (1u << 24))
      throw std::logic_error("main bound floor failed to converge");
  }
}

BigInt inequality_threshold(const BigInt& k) {
  if (k < 2) throw std::invalid_argument("threshold needs k >= 2");
  for (unsigned q = 32;; q *= 2) {
    RationalInterval L = log2_bracket(k, q);
    if (L.exact()) {
      ExactRational c = L.lo * L.lo * L.lo;
      return ceil_rational(c);
    }
    ExactRational clo = L.lo * L.lo * L.lo;
    ExactRational chi = L.hi * L.hi * L.hi;
    BigInt flo = floor_rational(clo), fhi = floor_rational(chi);
    // L^3 is irrational here, so it lies strictly inside (flo, flo + 1).
    if (flo == fhi) return flo + 1;
    if (q > (1u << 24))
      throw std::logic_error("threshold failed to converge");
  }
}

bool verify_inequality_a(const BigInt& k, const BigInt& n) {
  if (k < 3) throw std::invalid_argument("inequality check needs k >= 3");
  BigInt threshold = inequality_threshold(k);
  if (n < threshold)
    throw std::invalid_argument("inequality check needs n >= ceil(log2(k)^3) = " +
                                threshold.str() + ", got n = " + n.str());
  // The raw formula, not bound_a(): the check is pure arithmetic and the
  // cube threshold can sit below k (k = 1024 gives threshold 1000).
  const BigInt a = k * ceil_div(n, floor_log2(k) + 1) - k + 2;
  for (unsigned q = 32;; q *= 2) {
    RationalInterval L = log2_bracket(k, q);
    ExactRational rhs_lo = ExactRational(k * n) * (L.lo - 1) / (L.hi * L.hi);
    ExactRational rhs_hi = ExactRational(k * n) * (L.hi - 1) / (L.lo * L.lo);
    if (ExactRational(a) >= rhs_hi) return true;
    if (ExactRational(a) < rhs_lo) return false;
    if (L.exact())  // point bracket and still undecided: a == rhs exactly
      return ExactRational(a) >= rhs_lo;
    if (q > (1u << 24))
      throw std::logic_error("inequality check failed to converge");
  }
}

SlopeComparison slope_compare(const BigInt& k) {
  if (k < 3) throw std::invalid_argument("slope comparison needs k >= 3");
  SlopeComparison c;
  c.slope_a = ExactRational(k, floor_log2(k) + 1);
  c.slope_b = ExactRational(2) + sum_inverse_d_star(k);
  c.winner = c.slope_a > c.slope_b ? 'a' : (c.slope_a < c.slope_b ? 'b' : '=');
  return c;
}

std::optional<BigInt> crossover(const BigInt& k_max) {
  if (k_max < 3) throw std::invalid_argument("crossover needs k_max >= 3");
  // Segment starts: k = 3, every power of two (slope_a changes divisor),
  // and every C(d, d/2) + 1 (the per-step increment of slope_b changes).
  std::vector<BigInt> starts;
  for (BigInt p = 4; p <= k_max; p <<= 1) starts.push_back(p);
  for (int d = 3;; ++d) {
    BigInt b = central_binomial(d) + 1;
    if (b > k_max) break;
    if (b > 3) starts.push_back(b);
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  starts.push_back(k_max + 1);  // sentinel

  // Walk segments [s, e] carrying S(s) = sum_{j=3}^{s} 1/d*(j); inside a
  // segment D(k) = slope_a(k) - slope_b(k) is linear in k.
  BigInt s = 3;
  ExactRational S(1, 2);  // 1/d*(3)
  for (const BigInt& next : starts) {
    if (s > k_max) break;
    BigInt e = next - 1;
    if (e > k_max) e = k_max;
    const int t1 = floor_log2(s) + 1;
    ExactRational D = ExactRational(s, t1) - 2 - S;
    if (D > 0) return s;
    if (e > s) {
      const int dinc = d_star(s + 1);  // constant across (s, e]
      ExactRational delta =
          ExactRational(1, t1) - ExactRational(1, dinc);
      if (delta > 0) {
        // least i >= 1 with D + i*delta > 0
        BigInt i = floor_rational(-D / delta) + 1;
        if (s + i <= e) return s + i;
      }
      S += ExactRational(e - s, dinc);
    }
    if (e == k_max) break;
    S += ExactRational(1, d_star(next));
    s = next;
  }
  return std::nullopt;
}

std::optional<BigInt> crossover_scan(const BigInt& k_max) {
  if (k_max < 3) throw std::invalid_argument("crossover needs k_max >= 3");
  if (k_max > 1000000)
    throw std::invalid_argument("scan mode is capped at k_max = 10^6");
  const long km = static_cast<long>(k_max);
  ExactRational S(1, 2);
  int d = 2;
  BigInt boundary = central_binomial(3) + 1;  // first j with d*(j) = 3
  for (long k = 3; k <= km; ++k) {
    if (k > 3) {
      while (BigInt(k) >= boundary) {
        ++d;
        boundary = central_binomial(d + 1) + 1;
      }
      S += ExactRational(1, d);
    }
    ExactRational a(k, floor_log2(k) + 1);
    if (a > ExactRational(2) + S) return BigInt(k);
  }
  return std::nullopt;
}

namespace {

std::vector<BoundEntry> antichain_entries(const BigInt& k, const BigInt& n) {
  std::vector<BoundEntry> out;
  const bool base_ok = k >= 3 && n >= k;
  out.push_back({"bound_a", BoundKind::lower,
                 base_ok ? std::optional<BigInt>(bound_a(k, n)) : std::nullopt,
                 "", "n >= k >= 3", base_ok});
  out.push_back({"bound_b", BoundKind::lower,
                 base_ok ? std::optional<BigInt>(bound_b(k, n)) : std::nullopt,
                 "", "n >= k >= 3", base_ok});
  out.push_back({"lower_3n_minus_1", BoundKind::lower, 3 * n - 1, "",
                 "n > k >= 3", k >= 3 && n > k});
  if (k >= 3) {
    BigInt threshold = inequality_threshold(k);
    out.push_back({"main_lower", BoundKind::lower, main_bound_floor(k, n), "",
                   "n >= k and n >= ceil(log2(k)^3) = " + threshold.str(),
                   base_ok && n >= threshold});
    // (n-1)k - (log2(k)/2 + log2(log2(k))/2), up to an additive constant:
    // display only, never part of pass/fail logic.
    RationalInterval L = log2_bracket(k, 1 << 10);
    RationalInterval LL_lo = log2_bracket(L.lo, 1 << 10);
    RationalInterval LL_hi = log2_bracket(L.hi, 1 << 10);
    ExactRational mid = ExactRational(n - 1) * k -
                        (L.lo + L.hi) / 4 -
                        (LL_lo.lo + LL_hi.hi) / 4;
    out.push_back({"upper_approx_excess", BoundKind::approx, std::nullopt,
                   "~" + decimal_string(mid, 2) + " + O(1)",
                   "n > k >= 3 (additive constant unspecified)",
                   k >= 3 && n > k});
  }
  return out;
}

BigInt ceil_log2(const BigInt& n) {
  int f = floor_log2(n);
  return is_power_of_two(n) ? BigInt(f) : BigInt(f + 1);
}

BigInt ceil_4th_root(const BigInt& x) {
  BigInt f = iroot_floor(x, 4);
  return f * f * f * f == x ? f : f + 1;
}

}  // namespace

BoundReport antichain_bounds(const BigInt& k, const BigInt& n) {
  require_antichain_args(k, n);
  BoundReport r;
  r.target = "antichain:" + BigInt(k + 1).str();
  r.n = n;
  r.k = k;
  r.entries = antichain_entries(k, n);
  validate_report(r);
  return r;
}

BoundReport reference_bounds(const std::string& descriptor, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("reference bounds need n >= 1");
  BoundReport r;
  r.target = descriptor;
  r.n = n;
  if (descriptor == "v2") {
    r.entries.push_back(
        {"exact_n_plus_1", BoundKind::exact, n + 1, "", "n >= 2", n >= 2});
  } else if (descriptor == "diamond") {
    r.entries.push_back(
        {"lower_log2", BoundKind::lower, ceil_log2(n), "", "n >= 2", n >= 2});
    r.entries.push_back(
        {"lower_sqrt", BoundKind::lower, isqrt_ceil(n), "", "n >= 1", true});
    r.entries.push_back(
        {"upper_n_plus_1", BoundKind::upper, n + 1, "", "n >= 2", n >= 2});
  } else if (descriptor == "butterfly") {
    r.entries.push_back(
        {"lower_log2", BoundKind::lower, ceil_log2(n), "", "n >= 3", n >= 3});
    r.entries.push_back({"upper_quadratic", BoundKind::upper,
                         binomial(n, 2) + 2 * n - 1, "", "n >= 3", n >= 3});
  } else if (descriptor.rfind("chain:", 0) == 0 ||
             descriptor.rfind("antichain:", 0) == 0) {
    const bool chain = descriptor[0] == 'c';
    std::string tail = descriptor.substr(chain ? 6 : 10);
    if (tail.empty() ||
        tail.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("unsupported bound target: " + descriptor);
    BigInt m(tail);
    if (m < 2)
      throw std::invalid_argument(
          "bound formulas need a target with at least 2 elements");
    BigInt k = m - 1;
    r.k = k;
    if (chain) {
      // Weak-saturation chain numbers.  The cited bracket is asymptotic in
      // k with no honest n gate, so entries carry a textual condition only.
      if (m < 3 || m > 257)
        throw std::invalid_argument(
            "chain bound formulas cover chain:3 .. chain:257");
      const unsigned ku = k.convert_to<unsigned>();
      // ceil(2^(k/2 - 1)) = ceil(sqrt(2^(k-2)))
      r.entries.push_back({"lower_half_exponent", BoundKind::lower,
                           isqrt_ceil(BigInt(1) << (ku - 2)), "",
                           "n sufficiently large", true});
      r.entries.push_back({"upper_exponent", BoundKind::upper,
                           BigInt(1) << (ku - 1), "", "n sufficiently large",
                           true});
      // ceil(15^(k/4)) = ceil((15^k)^(1/4)) = ceil(2^((1-eps)k)) with
      // eps = 1 - log2(15)/4; integer fourth root keeps it exact.
      BigInt p15 = 1;
      for (unsigned i = 0; i < ku; ++i) p15 *= 15;
      r.entries.push_back({"upper_15_quarter", BoundKind::upper,
                           ceil_4th_root(p15), "", "n sufficiently large",
                           true});
    } else if (m == 2) {
      r.entries.push_back(
          {"exact_n_plus_1", BoundKind::exact, n + 1, "", "n >= 1", true});
    } else if (m == 3) {
      r.entries.push_back(
          {"exact_2n", BoundKind::exact, 2 * n, "", "n >= 1", true});
    } else {
      r.entries = antichain_entries(k, n);
    }
  } else {
    throw std::invalid_argument("unsupported bound target: " + descriptor);
  }
  validate_report(r);
  return r;
}

}  // namespace satlat
