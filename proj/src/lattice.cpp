#include "satlat/lattice.hpp"

#include <bit>
#include <stdexcept>

namespace satlat {

Mask full_mask(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("ground size out of range [1, 24]: " +
                                std::to_string(n));
  return (Mask{1} << n) - 1;
}

int popcount(Mask m) { return std::popcount(m); }

Relation compare(Mask a, Mask b) {
  if (a == b) return Relation::equal;
  if (is_subset_of(a, b)) return Relation::subset;
  if (is_subset_of(b, a)) return Relation::superset;
  return Relation::incomparable;
}

std::string to_bitstring(Mask m, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (m >> i & 1) s[static_cast<size_t>(i)] = '1';
  return s;
}

std::optional<Mask> mask_from_bitstring(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n) return std::nullopt;
  Mask m = 0;
  for (int i = 0; i < n; ++i) {
    if (s[static_cast<size_t>(i)] == '1')
      m |= Mask{1} << i;
    else if (s[static_cast<size_t>(i)] != '0')
      return std::nullopt;
  }
  return m;
}

std::string to_set_notation(Mask m) {
  std::string s = "{";
  for (int i = 0; m >> i; ++i) {
    if (!(m >> i & 1)) continue;
    if (s.size() > 1) s += ',';
    s += std::to_string(i + 1);
  }
  return s + "}";
}

void for_each_in_open_interval(Mask x, Mask y,
                               const std::function<void(Mask)>& fn) {
  if (x == y) throw std::invalid_argument("open interval endpoints are equal");
  if (!is_subset_of(x, y))
    throw std::invalid_argument("open interval endpoints not nested");
  // Walk the proper non-empty submasks of y - x in ascending mask order and
  // add x back; (s | ~d) + 1 masked to d is the classic (s - d) & d step.
  Mask d = y & ~x;
  for (Mask s = (0 - d) & d /* lowest set bit, the first non-empty submask */;
       s != d; s = ((s | ~d) + 1) & d) {
    fn(x | s);
  }
}

std::vector<Mask> open_interval(Mask x, Mask y) {
  std::vector<Mask> out;
  int d = cube_dimension(x, y);  // validates nesting (x == y rejected below)
  if (d > 1) out.reserve((size_t{1} << d) - 2);
  for_each_in_open_interval(x, y, [&](Mask z) { out.push_back(z); });
  return out;
}

int cube_dimension(Mask x, Mask y) {
  if (!is_subset_of(x, y))
    throw std::invalid_argument("interval endpoints not nested");
  return popcount(y & ~x);
}

}  // namespace satlat
