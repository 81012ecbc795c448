#pragma once

// Saturation verdicts and the exact minimum-saturated-family solver.
//
// F is P-saturated (in the given containment mode) when F contains no copy
// of P and every non-member S makes F + {S} contain a copy through S.  The
// solver enumerates P-free families in lexicographic member order, so the
// first saturated family found at the minimum feasible size is the
// lexicographically least witness overall.

#include <cstdint>
#include <string>

#include "satlat/containment.hpp"

namespace satlat {

inline const char* to_string(Mode m) {
  return m == Mode::induced ? "induced" : "weak";
}

struct SaturationVerdict {
  bool saturated = false;
  // First violation in ascending order: either the least embedding of a
  // copy inside F, or the least addable set that creates no copy.
  std::optional<Embedding> copy_inside;
  std::optional<Mask> missing_blocker;
};

SaturationVerdict is_saturated(const Family& f, const PosetSpec& p, Mode mode);

enum class ScanOrder { ascending, descending };

// Single greedy pass over all non-members in the given mask order, adding
// every set whose addition keeps F copy-free.  The result is saturated;
// saturated inputs come back unchanged.  Errors if F already has a copy.
Family complete(const Family& f, const PosetSpec& p, Mode mode,
                ScanOrder order = ScanOrder::ascending);

struct SolveOptions {
  std::uint64_t node_budget = 0;  // 0 = unbounded; required when n >= 6
  bool symmetry_pruning = true;   // canonical-prefix rule, applied for n <= 4
  bool seed_lower_bound = false;  // start at the best applicable lower bound
  int jobs = 1;                   // worker threads over first-member subtrees
};

struct SolveResult {
  int n = 0;
  std::string target;
  Mode mode = Mode::induced;
  bool conclusive = false;
  int min_size = -1;           // valid when conclusive
  Family witness;              // lexicographically least, when conclusive
  int interval_low = 0;        // when inconclusive: min lies in
  int interval_high = 0;       //   [interval_low, interval_high]
  int start_size = 0;          // first size examined (0 unless seeded)
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

// Exact minimum size of a saturated family in B_n, by exhausting sizes
// start_size, start_size+1, ... until a saturated family appears.  The
// greedy completion of the empty family caps the search.  A node budget
// turns exhaustion into an interval answer; it requires jobs == 1 so that
// the point where the budget dies is schedule-independent.
SolveResult min_saturated(int n, const PosetSpec& p, Mode mode,
                          const SolveOptions& opts = {});

}  // namespace satlat
