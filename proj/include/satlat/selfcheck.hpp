#pragma once

// Self-audit: recomputes every number the project pins — exact small
// saturation values, the diamond bracket and its audits, width machinery
// against a brute-force oracle, the gap/colouring pipeline, bound
// arithmetic, slope claims, the inequality sweep, and the reference
// formulas — and renders one pass/fail document.

#include <string>
#include <vector>

namespace satlat::selfcheck {

struct Row {
  std::string label;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Section {
  int index = 0;
  std::string title;
  double time_limit_seconds = 0;  // stated budget; enforced by callers
  std::vector<Row> rows;
  bool pass = true;
  double elapsed_seconds = 0;
};

Section exact_small_values();   // 1: solver vs closed-form small values
Section diamond_bracket();      // 2: diamond min + witness audits
Section dilworth_and_width();   // 3: width/partition vs brute force in B_4
Section pipeline_audits();      // 4: gap fullness, elimination, colouring
Section bound_arithmetic();     // 5: formula values + grouped-vs-direct sum
Section slope_claims();         // 6: winner table + crossover pin + scan
Section inequality_sweep();     // 7: certified inequality for k in [3,1024]
Section reference_formulas();   // 8: named-target brackets

std::vector<Section> run_all();

std::string render_markdown(const std::vector<Section>& sections);

}  // namespace satlat::selfcheck
