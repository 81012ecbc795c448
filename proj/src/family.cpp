#include "satlat/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace satlat {

Family::Family(int ground_size, std::vector<Mask> sets)
    : n(ground_size), members(std::move(sets)) {
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("ground size out of range [1, 24]: " +
                                std::to_string(n));
  const Mask top = full_mask(n);
  for (Mask m : members)
    if (m > top)
      throw std::invalid_argument("member " + std::to_string(m) +
                                  " exceeds ground set of size " +
                                  std::to_string(n));
  std::sort(members.begin(), members.end());
  auto dup = std::adjacent_find(members.begin(), members.end());
  if (dup != members.end())
    throw std::invalid_argument("duplicate member " + to_set_notation(*dup));
}

Family Family::whole_lattice(int ground_size) {
  const Mask top = full_mask(ground_size);
  std::vector<Mask> all(static_cast<size_t>(top) + 1);
  for (Mask m = 0; m <= top; ++m) all[m] = m;
  return Family(ground_size, std::move(all));
}

bool Family::contains(Mask s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

int Family::index_of(Mask s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s);
  if (it == members.end() || *it != s) return -1;
  return static_cast<int>(it - members.begin());
}

Family Family::with(Mask s) const {
  if (contains(s))
    throw std::invalid_argument("member already present: " +
                                to_set_notation(s));
  Family out = *this;
  out.members.insert(
      std::upper_bound(out.members.begin(), out.members.end(), s), s);
  return out;
}

Family Family::without(Mask s) const {
  int i = index_of(s);
  if (i < 0)
    throw std::invalid_argument("member absent: " + to_set_notation(s));
  Family out = *this;
  out.members.erase(out.members.begin() + i);
  return out;
}

}  // namespace satlat
