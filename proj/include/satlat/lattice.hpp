#pragma once

// Boolean-lattice primitives: subsets of the ground set {1..n} as bitmasks.
// Bit i-1 of the mask is set iff ground element i is in the subset, so the
// leftmost character of a bitstring rendering is element 1.  Containment is
// bitwise AND; a strict subset always has a numerically smaller mask, which
// is what makes ascending mask order a linear extension of the lattice.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace satlat {

using Mask = std::uint32_t;

// Enumerative operations stay desk-scale; 2^24 masks is the ceiling.
inline constexpr int kMaxGroundSize = 24;

enum class Relation { equal, subset, superset, incomparable };

Mask full_mask(int n);

int popcount(Mask m);

inline bool is_subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool is_strict_subset(Mask a, Mask b) { return a != b && is_subset_of(a, b); }
inline bool incomparable(Mask a, Mask b) {
  return !is_subset_of(a, b) && !is_subset_of(b, a);
}

// Total on pairs of masks: equal / subset (a strictly below b) / superset /
// incomparable.
Relation compare(Mask a, Mask b);

// "0110…" with the leftmost character carrying ground element 1.
std::string to_bitstring(Mask m, int n);

// Inverse of to_bitstring; rejects wrong length or characters outside {0,1}.
std::optional<Mask> mask_from_bitstring(const std::string& s, int n);

// Display form "{1,3,4}"; "{}" for the empty set.
std::string to_set_notation(Mask m);

// All Z with x STRICT-SUBSET Z STRICT-SUBSET y, ascending by mask value.
// Rejects x = y and x not-a-subset-of y.
std::vector<Mask> open_interval(Mask x, Mask y);

// Streaming form of open_interval: fn sees exactly the same sequence without
// materialising it (the interval of a wide gap has 2^d - 2 members).
void for_each_in_open_interval(Mask x, Mask y,
                               const std::function<void(Mask)>& fn);

// d such that the closed interval [x, y] is a copy of B_d; requires x <= y
// in the subset order (x == y gives 0).
int cube_dimension(Mask x, Mask y);

}  // namespace satlat
