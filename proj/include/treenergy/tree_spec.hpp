#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treenergy/forest.hpp"

namespace treenergy {

/// Named tree shapes plus explicit edge lists. Text forms:
///   P(9)              path
///   S(10;2,6,1)       starlike P_n(a_1,...,a_k)
///   T(11;2,2|2,2)     double broom T_n(a,b|c,d)
///   E(4;0-1,1-2,1-3)  explicit edge list (any forest)
struct TreeSpec {
  enum class Kind { Path, Starlike, DoubleBroom, Explicit };

  Kind kind = Kind::Path;
  int n = 1;
  std::vector<int> arms;                      // Starlike
  int a = 0, b = 0, c = 0, d = 0;             // DoubleBroom
  std::vector<std::pair<int, int>> edges;     // Explicit

  static TreeSpec path(int n);
  static TreeSpec starlike(int n, std::vector<int> arms);
  static TreeSpec double_broom(int n, int a, int b, int c, int d);
  static TreeSpec explicit_edges(int n, std::vector<std::pair<int, int>> edges);

  static TreeSpec parse(const std::string& text);  // InvalidSpec
  std::string to_string() const;
};

/// Deterministic canonical labeling:
///   Path: 0-1-...-(n-1).
///   Starlike: center 0, then arms in declared order, each labeled
///     outward consecutively.
///   DoubleBroom: middle path 0..m-1 (m = n-a-b-c-d), arms a then b
///     attached at vertex 0, arms c then d at vertex m-1, each labeled
///     outward consecutively.
Forest build(const TreeSpec& spec);  // InvalidSpec

/// Recovers a named shape from a tree when it is a path, a starlike tree
/// (arms descending) or a double broom with exactly two degree-3 branch
/// vertices (arm pairs descending, larger pair first).
std::optional<TreeSpec> recognize(const Forest& tree);

/// graph6 codec (trees/forests only on decode).
Forest parse_graph6(const std::string& g6);  // InvalidSpec / NotAForest
std::string to_graph6(const Forest& f);

/// Accepts either a spec string or a graph6 string (tried in that order).
Forest parse_forest(const std::string& text);

}  // namespace treenergy
