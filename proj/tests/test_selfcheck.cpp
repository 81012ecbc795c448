#include "doctest.h"
#include "satlat/selfcheck.hpp"

using namespace satlat;

// The expensive sections run in the acceptance binary and through the CLI
// report; here only the cheap ones, plus the rendering contract.

TEST_CASE("reference-formula section passes and fills every row") {
  selfcheck::Section s = selfcheck::reference_formulas();
  CHECK(s.index == 8);
  CHECK(s.pass);
  CHECK_FALSE(s.rows.empty());
  for (const auto& row : s.rows) {
    CAPTURE(row.label);
    CHECK(row.pass);
    CHECK_FALSE(row.expected.empty());
    CHECK_FALSE(row.computed.empty());
  }
}

TEST_CASE("slope section passes within its budget") {
  selfcheck::Section s = selfcheck::slope_claims();
  CHECK(s.index == 6);
  CHECK(s.pass);
  CHECK(s.elapsed_seconds < s.time_limit_seconds);
}

TEST_CASE("markdown rendering shows verdicts and budgets") {
  selfcheck::Section s = selfcheck::reference_formulas();
  std::string doc = selfcheck::render_markdown({s});
  CHECK(doc.find("# Self-audit") != std::string::npos);
  CHECK(doc.find("Overall: PASS") != std::string::npos);
  CHECK(doc.find(s.title) != std::string::npos);
  CHECK(doc.find("| check | expected | computed | status |") !=
        std::string::npos);
  // a failing row flips the document verdict
  s.rows[0].pass = false;
  s.pass = false;
  doc = selfcheck::render_markdown({s});
  CHECK(doc.find("Overall: FAIL") != std::string::npos);
}
