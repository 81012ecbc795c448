#pragma once

// A family is a finite set of subsets of {1..n}.  Members are kept strictly
// ascending by mask value, so member order is a linear extension of the
// subset order and "lexicographically least family" means least member
// sequence under that order.

#include <vector>

#include "satlat/lattice.hpp"

namespace satlat {

struct Family {
  int n = 0;
  std::vector<Mask> members;  // strictly ascending, all < 2^n

  Family() = default;
  // Validates the ground size and every mask, sorts, rejects duplicates.
  Family(int ground_size, std::vector<Mask> sets);

  static Family empty(int ground_size) { return Family(ground_size, {}); }
  // {0, 1, ..., 2^n - 1}: the whole lattice.
  static Family whole_lattice(int ground_size);

  int size() const { return static_cast<int>(members.size()); }
  bool contains(Mask s) const;
  // Position of s among the sorted members, -1 if absent.
  int index_of(Mask s) const;
  Family with(Mask s) const;     // rejects s already present
  Family without(Mask s) const;  // rejects s absent

  bool operator==(const Family&) const = default;
};

}  // namespace satlat
