#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treenergy/energy.hpp"
#include "treenergy/enumerate.hpp"
#include "treenergy/exact_poly.hpp"
#include "treenergy/quasi_order.hpp"
#include "treenergy/tree_spec.hpp"

namespace treenergy {

/// The members of S_n = {P_n(2,a,b) : a+b=n-3, 1<=a<=b} in descending
/// quasi-order: even a ascending 2,4,...,2t, then odd a descending
/// 2l+1,...,3,1, with k = floor((n-3)/2), t = floor(k/2),
/// l = floor((k-1)/2). Throws InvalidOrder for n < 7.
std::vector<TreeSpec> s_n_order(int n);

struct RankingEntry {
  int rank = 0;
  std::string code;
  std::optional<TreeSpec> spec;
  EnergyValue energy;
  ExactPoly phi_tilde;
  int tie_group = 0;  // entries with identical phitilde share a group
};

/// Line-oriented store mapping canonical code -> (phitilde text,
/// midpoint, radius); one record per line, space separated.
class EnergyCache {
 public:
  EnergyCache() = default;
  explicit EnergyCache(const std::string& dir);  // loads <dir>/energies.cache
  bool enabled() const { return !path_.empty(); }
  bool lookup(const std::string& code, double tol, EnergyValue& out,
              std::string& phi_text) const;
  void store(const std::string& code, const std::string& phi_text, const EnergyValue& e);
  void save() const;

 private:
  struct Entry {
    std::string phi_text;
    double midpoint;
    double radius;
  };
  std::string path_;
  std::map<std::string, Entry> entries_;
  mutable bool dirty_ = false;
};

struct RankingOptions {
  double tol = 1e-9;
  int jobs = 1;
  int cap = kDefaultEnumerationCap;
  std::string cache_dir;  // empty disables the cache
};

/// Exhaustive certified energy ranking. Adjacent entries of the returned
/// prefix are either radius-separated, proven phitilde-identical (same
/// tie group), or exactly ordered by the quasi-order after tightening;
/// otherwise UnresolvedTie. Deterministic for any jobs count.
std::vector<RankingEntry> rank_by_energy(int n, int top, const RankingOptions& opts = {});

struct PredictedList {
  int n = 0;
  std::vector<TreeSpec> trees;  // P_n followed by the surviving S_n members
};

/// The claimed top floor((n-7)/2) list for n >= 31: P_n and the
/// quasi-order list of S_n with its last three members removed.
PredictedList predicted_top_list(int n);  // RangeViolation below 31

struct PrefixReport {
  int n = 0;
  int compared = 0;       // predicted positions checked
  int agree_prefix = 0;   // longest agreeing prefix
  bool full_agreement = false;
  std::string text;
};

/// Compares the brute-force ranking against [P_n] ++ s_n_order(n),
/// honoring phitilde-identical tie groups, and reports the longest
/// agreeing prefix. Nothing is asserted below the theorem's range.
PrefixReport check_against_bruteforce(int n, const RankingOptions& opts = {});

struct GraftingReport {
  int same_vertex_cases = 0;
  int two_vertex_cases = 0;
  int reduction_cases = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  std::string text;
};

/// Checks the edge-grafting parity rules on sampled bases (same-vertex
/// and two-vertex variants) and, over every enumerated order-n tree with
/// at least two branch vertices, that repeated total grafting yields a
/// strictly quasi-greater tree with one branch vertex fewer and the same
/// maximum degree.
GraftingReport grafting_property_check(int n);

/// The total-grafting reduction itself (used by the check above and the
/// verification suite): returns a tree T' with N3(T') = N3(T)-1 and
/// Delta(T') = Delta(T) such that T is strictly quasi-dominated by T'.
Forest reduce_branch_vertex(const Forest& t);

}  // namespace treenergy
