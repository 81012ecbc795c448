#pragma once

// Brute-force oracles for the test suite.  Each one is written from the
// definition, independently of the library's algorithms, so agreement is
// meaningful: subset-DP antichains (no matching), full injection
// enumeration for copies (no pruned backtracking), and literal formula
// summation (no grouping).

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "satlat/containment.hpp"
#include "satlat/family.hpp"
#include "satlat/numbers.hpp"
#include "satlat/poset.hpp"

namespace oracle {

using satlat::BigInt;
using satlat::Embedding;
using satlat::Family;
using satlat::Mask;
using satlat::Mode;
using satlat::PosetSpec;

// Maximum antichain size via DP over member subsets (|F| <= 20).
inline int max_antichain(const std::vector<Mask>& mem) {
  const int m = static_cast<int>(mem.size());
  std::vector<unsigned> cmp(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && !satlat::incomparable(mem[i], mem[j])) cmp[i] |= 1u << j;
  std::vector<char> anti(size_t{1} << m, 0);
  anti[0] = 1;
  int best = 0;
  for (unsigned s = 1; s < (1u << m); ++s) {
    const int low = std::countr_zero(s);
    const unsigned rest = s & (s - 1);
    anti[s] = anti[rest] && (rest & cmp[low]) == 0;
    if (anti[s]) best = std::max(best, std::popcount(s));
  }
  return best;
}

// All injections [p] -> member indices, in lexicographic image order; the
// first valid one is returned.  Exponential and proud of it.
inline std::optional<std::vector<int>> least_embedding(
    const Family& f, const PosetSpec& p, Mode mode,
    std::optional<Mask> required = {}) {
  const int m = f.size(), k = p.size();
  if (k > m) return std::nullopt;
  std::vector<int> image(static_cast<size_t>(k), -1);
  std::vector<char> used(static_cast<size_t>(m), 0);
  std::optional<std::vector<int>> found;
  auto ok_pair = [&](int u, int v) {
    const Mask a = f.members[static_cast<size_t>(image[static_cast<size_t>(u)])];
    const Mask b = f.members[static_cast<size_t>(image[static_cast<size_t>(v)])];
    if (p.less(u, v)) return satlat::is_strict_subset(a, b);
    if (p.less(v, u)) return satlat::is_strict_subset(b, a);
    if (mode == Mode::induced) return satlat::incomparable(a, b);
    return true;
  };
  auto rec = [&](auto&& self, int u) -> void {
    if (found) return;
    if (u == k) {
      if (required) {
        bool has = false;
        for (int x : image)
          if (f.members[static_cast<size_t>(x)] == *required) has = true;
        if (!has) return;
      }
      found = image;
      return;
    }
    for (int c = 0; c < m && !found; ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      image[static_cast<size_t>(u)] = c;
      bool good = true;
      for (int v = 0; v < u && good; ++v) good = ok_pair(v, u);
      if (good) {
        used[static_cast<size_t>(c)] = 1;
        self(self, u + 1);
        used[static_cast<size_t>(c)] = 0;
      }
    }
    image[static_cast<size_t>(u)] = -1;
  };
  rec(rec, 0);
  return found;
}

inline bool has_copy(const Family& f, const PosetSpec& p, Mode mode,
                     std::optional<Mask> required = {}) {
  return least_embedding(f, p, mode, required).has_value();
}

inline bool is_saturated(const Family& f, const PosetSpec& p, Mode mode) {
  if (has_copy(f, p, mode)) return false;
  const Mask full = satlat::full_mask(f.n);
  for (Mask s = 0; s <= full; ++s) {
    if (f.contains(s)) continue;
    if (!has_copy(f.with(s), p, mode, s)) return false;
  }
  return true;
}

// Exact minimum over every subfamily of B_n; n <= 3 only (2^(2^n) families).
inline std::optional<int> min_saturated(int n, const PosetSpec& p, Mode mode) {
  const unsigned total = 1u << (1u << n);
  std::optional<int> best;
  for (unsigned code = 0; code < total; ++code) {
    const int size = std::popcount(code);
    if (best && size >= *best) continue;
    std::vector<Mask> mem;
    for (unsigned i = 0; i < (1u << n); ++i)
      if (code & (1u << i)) mem.push_back(static_cast<Mask>(i));
    Family f(n, mem);
    if (is_saturated(f, p, mode)) best = size;
  }
  return best;
}

// Pascal-triangle binomial, independent of the multiplicative routine.
inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<BigInt> row(static_cast<size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
  return row[static_cast<size_t>(k)];
}

// d*(j) straight from the definition.
inline int d_star(long long j) {
  if (j <= 2) return 1;
  int d = 1;
  while (binomial(d + 1, (d + 1) / 2) <= BigInt(j - 1)) ++d;
  return d;
}

}  // namespace oracle
