#pragma once

#include <string>
#include <vector>

#include "treenergy/forest.hpp"

namespace treenergy {

struct ReportItem {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string id;
  std::string claim;
  int n = 0;
  std::vector<ReportItem> items;

  bool passed() const;
  std::string to_text() const;
};

/// Mechanically re-executes one of the catalogued extremal-energy
/// claims at order n: rebuilds the base graphs and cut edges, replays
/// the polynomial identities, sign analyses, integral bounds and energy
/// comparisons, and reports every intermediate quantity against its
/// expected value. Throws RangeViolation outside the claim's range and
/// Error for unknown ids.
///
/// ids: thm3.3, lem4.3, lem4.4, thm4.1, thm4.2, thm4.3,
///      thm5.1, thm5.2, thm5.3, thm5.4, thm5.5, thm5.6
VerificationReport verify_theorem(const std::string& id, int n);

struct SuiteEntry {
  std::string id;
  int default_n;
  std::string claim;
};

/// The catalogue with per-claim default orders (the flagship run).
const std::vector<SuiteEntry>& verification_catalogue();

/// Named base instances used by the subdivision-family arguments; these
/// fix the graphs and the cut edges once so library, tests and CLI agree.
struct FamilyPair {
  Forest g;   // the family expected to have smaller energy
  CutEdge eg;
  Forest h;   // the larger side
  CutEdge eh;
};

FamilyPair fourth_tree_instance();    // T_10(2,2|2,2) vs P_10(2,6,1)
FamilyPair broom_tail_instance();     // T_11(3,2|2,2) vs T_11(2,2|2,2)
FamilyPair quad_star_instance();      // P_9(2,2,2,2) vs P_9(2,1,5)
FamilyPair broom_vs_s_instance();     // T_22(2,2|2,2) vs P_22(2,1,18)
FamilyPair c3_max_instance();         // P_31(4,4,22) vs P_31(2,7,21)

}  // namespace treenergy
