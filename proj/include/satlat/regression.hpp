#pragma once

// Exact values computed once by this tool (solver runs and the crossover
// search) and pinned here so later changes cannot shift them silently.
// A sentinel of -1 means the value has not been computed yet; the self-audit
// fails loudly on sentinels.

namespace satlat {

// Minimum size of a diamond-saturated family (induced mode).
inline constexpr int kDiamondMinB3 = 4;
inline constexpr int kDiamondMinB4 = 5;

// Least k at which the per-n slope of the k-driven formula overtakes the
// level-sum formula (searched up to 2^64), as a decimal string.  The winner
// is not monotone in k (the k-driven slope dips at each power of two), so
// this is the first win, not a permanent takeover.
inline constexpr const char* kSlopeCrossoverK = "7947";

}  // namespace satlat
