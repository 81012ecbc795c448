#pragma once

// Width, minimum chain partitions, and gap bookkeeping.  Width equals the
// minimum number of chains covering the family; both are produced from one
// maximum bipartite matching on the containment relation, with the witness
// antichain read off the matching's minimum vertex cover.

#include <utility>
#include <vector>

#include "satlat/family.hpp"

namespace satlat {

struct WidthResult {
  int value = 0;
  std::vector<Mask> antichain;  // witness of that size, ascending
};

// Maximum antichain size with witness.  Errors on an empty family.
WidthResult width(const Family& f);

struct ChainPartition {
  // Exactly the members the chains cover; when augmented, the empty set and
  // the full set are present in every chain but not counted here.
  Family family;
  std::vector<std::vector<Mask>> chains;  // each strictly ascending by mask
  bool augmented = false;

  int chain_count() const { return static_cast<int>(chains.size()); }

  // Validates: chains pairwise disjoint apart from shared endpoints when
  // augmented, each chain totally ordered by containment, union matches
  // `family` (plus endpoints when augmented).
  static ChainPartition from_chains(Family family,
                                    std::vector<std::vector<Mask>> chains,
                                    bool augmented);
};

// A gap is a consecutive pair X < Y on a chain; size = |Y| - |X|, the
// dimension of the cube [X, Y].
struct Gap {
  int chain_index = 0;
  Mask x = 0;
  Mask y = 0;
  int size = 0;
  bool operator==(const Gap&) const = default;
};

// Dilworth partition of f into width(f) disjoint chains, deterministic for
// a given member order.  Errors on an empty family.
ChainPartition chain_partition(const Family& f);

// Prepends the empty set and appends the full set to every chain and lists
// all gaps.  Requires an unaugmented partition whose family contains
// neither endpoint.
std::pair<ChainPartition, std::vector<Gap>> augment_and_gaps(
    const ChainPartition& p);

// Gaps of an already-augmented partition, chain by chain.
std::vector<Gap> gaps_of(const ChainPartition& p);

}  // namespace satlat
