#pragma once

// Constructive audit procedures.  Each one checks a structural property
// that is guaranteed for saturated families (diamond-saturated for the
// witness/digraph/extremal audits, antichain-saturated for the gap and
// colouring machinery) — but none of them assumes saturation: they report
// what they find, so they double as cross-checks on the solver.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satlat/chains.hpp"

namespace satlat {

// ---------- diamond-target audits ----------

struct WitnessPair {
  Mask fi = 0, gi = 0;  // members with fi \ gi = {element}
};

struct WitnessTable {
  Mask fstar = 0;
  int n = 0;
  // Slot e-1 holds the pair for ground element e.  For e in fstar the pair
  // satisfies F_e subseteq fstar and F_e \ G_e = {e}; for e outside fstar
  // it satisfies G_e superseteq fstar and F_e \ G_e = {e}.  Ties go to the
  // lexicographically least (F_e, G_e).
  std::vector<std::optional<WitnessPair>> inside;
  std::vector<std::optional<WitnessPair>> outside;
  bool complete = false;  // all n elements have their pair
};

// Witness pairs that isolate each ground element relative to the member
// fstar.  Completeness is guaranteed when f is diamond-saturated; fstar
// must be a member.
WitnessTable diamond_witness_table(const Family& f, Mask fstar);

struct DigraphAudit {
  long long arc_count = 0;    // ordered pairs (A, B) with |B \ A| = 1
  long long pair_budget = 0;  // |F| (|F| - 1)
  std::vector<bool> element_covered;  // slot e-1: some arc has B \ A = {e}
  bool pass = false;          // every ground element covered
};

// The witness digraph on members: arc (A, B) iff |B \ A| = 1.  For a
// diamond-saturated family every ground element labels an arc, which is
// what forces |F| (|F| - 1) >= n.
DigraphAudit diamond_digraph_audit(const Family& f);

struct ExtremalAuditItem {
  std::string check;  // "minimal_member" | "maximal_member" | "extreme_set"
  Mask subject = 0;
  int required = 0;  // lower bound on |F| this item demands
  bool pass = false;
};

struct ExtremalAudit {
  std::vector<ExtremalAuditItem> items;
  bool pass = true;
};

// Size forces from extremal members of a diamond-saturated family: a
// minimal member S demands |F| >= |S| + 1, a maximal member U demands
// |F| >= n - |U| + 1, and containing the empty or the full set demands
// |F| >= n + 1.
ExtremalAudit extremal_element_audit(const Family& f);

// ---------- antichain-target gap machinery ----------

struct GapFullness {
  bool pass = true;
  std::optional<Gap> failed_gap;
  std::optional<Mask> missing;  // first interior set absent from f
};

// Every open interval between consecutive chain elements must lie inside
// f.  Requires p augmented with p.family = f minus the two extreme sets.
GapFullness gap_fullness_audit(const Family& f, const ChainPartition& p);

// Gaps whose interior meets some other chain in >= 3 members.
std::vector<Gap> wide_gaps(const ChainPartition& p);

struct WideGapMove {
  Gap gap;              // the wide gap that was split
  int donor_chain = 0;  // chain that contributed the moved member
  Mask moved = 0;       // middle of the donor's lowest consecutive triple
  int measure_size_after = 0;        // largest wide-gap size after the move
  long long measure_count_after = 0; // wide gaps of that size after
};

struct MoveTrace {
  int initial_measure_size = 0;
  long long initial_measure_count = 0;
  std::vector<WideGapMove> moves;
};

// Repeatedly selects a wide gap of maximal size (lowest chain, then lowest
// bottom mask on ties), takes the lowest consecutive triple A < B < C
// inside it from the lowest donor chain, and moves B into the split gap.
// The pair (largest wide-gap size, count at that size) decreases strictly
// lexicographically on every move — enforced, since it is the termination
// argument.  Requires an augmented partition.
std::pair<ChainPartition, MoveTrace> eliminate_wide_gaps(ChainPartition p);

std::string format_trace(const MoveTrace& t);

struct MaxGapCheck {
  bool pass = true;
  std::optional<Gap> offender;  // first gap with 2^size - 2 > 2(k - 1)
};

// With no wide gaps and full interiors, a gap of size d spreads its
// 2^d - 2 interior sets over the other k - 1 chains at <= 2 apiece; the
// check verifies 2^d - 2 <= 2(k - 1) for every gap.
MaxGapCheck max_gap_bound_check(const ChainPartition& p);

// ---------- greedy chain colouring ----------

struct ColoredFamily {
  int n = 0;
  std::map<Mask, int> color;               // member -> colour 1..k
  std::vector<std::vector<Mask>> classes;  // augmented: endpoints included
};

// Colour j's class starts from the uncoloured remainder of chain j of p
// and greedily absorbs, in ascending mask order, every still-uncoloured
// member comparable with the whole class.  Classes are therefore maximal
// chains in what remains, and every member is coloured by round k.
// Requires p unaugmented with p.family = f minus the extreme sets.
ColoredFamily greedy_color(const Family& f, const ChainPartition& p);

struct ColoringCheckFailure {
  int color = 0;
  std::string kind;  // "gap-middle-layer" | "class-size"
  std::optional<Gap> gap;
};

struct ColoringCheck {
  bool pass = true;
  std::vector<ColoringCheckFailure> failures;
};

// For colour j: every gap of size d >= 2 in the augmented class must have
// room for its middle layer among the earlier colours, C(d, d/2) <= j - 1,
// and the augmented class must have at least ceil(n / d*(j)) + 1 members.
ColoringCheck coloring_gap_check(const Family& f, const ColoredFamily& c);

}  // namespace satlat
