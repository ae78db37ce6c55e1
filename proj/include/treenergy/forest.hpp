#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treenergy/exact_poly.hpp"

namespace treenergy {

/// Unordered edge of a forest; endpoints may be given in either order.
struct CutEdge {
  int u;
  int v;
};

/// Labeled simple acyclic graph on vertices 0..n-1. Immutable after
/// construction; every mutation-like operation returns a new forest.
class Forest {
 public:
  Forest() = default;

  /// Validates vertex range, self-loops, duplicates and acyclicity.
  static Forest from_edges(int n, std::vector<std::pair<int, int>> edges);

  static Forest single_vertex() { return from_edges(1, {}); }
  static Forest path(int n);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int component_count() const { return n_ - edge_count(); }
  bool is_tree() const { return n_ >= 1 && component_count() == 1; }

  /// Normalized (u < v), lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  /// Vertex sets of the connected components, each sorted ascending;
  /// components ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;

  Forest remove_edge(CutEdge e) const;                  // EdgeNotPresent
  Forest remove_vertex_pair(int u, int v) const;        // VertexNotPresent
  Forest disjoint_union(const Forest& other) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// G(k): replaces edge e = {u,v} (u < v after normalization) by the path
/// u, n, n+1, ..., n+k-1, v on k new vertices. k = 0 returns the input.
Forest subdivide(const Forest& g, CutEdge e, int k);

/// Attaches two new pendant paths of lengths a and b at u (either may be
/// zero). New vertices are labeled n.. outward, first path then second.
Forest graft_pair(const Forest& g, int u, int a, int b);

/// Attaches pendant paths of length a at u and b at v (u != v).
Forest graft_two_vertices(const Forest& g, int u, int v, int a, int b);

enum class TreeClass { C1, C2, C3, C4, C5 };

struct TreeClassification {
  TreeClass tree_class;
  int n3;          // number of vertices of degree >= 3
  int max_degree;  // Delta
  std::vector<int> arms;  // pendant path lengths of a starlike tree, descending
};

/// Partition of trees: C1 path; C2 starlike P_n(2,a,b); C3 starlike with
/// max degree 3 and no arm of length 2; C4 starlike with max degree >= 4;
/// C5 trees with at least two branch vertices. Throws NotConnected.
TreeClassification classify(const Forest& t);

const char* tree_class_name(TreeClass c);

/// Canonical level sequence of a tree: the lexicographically maximal
/// root-level sequence over all vertex orderings, rooted at the centroid
/// (for bicentral trees, at the centroid giving the larger sequence).
std::vector<int> canonical_level_sequence(const Forest& tree);

/// Canonical code string for a forest: per-component canonical codes in
/// balanced-parenthesis form, sorted descending, joined without separator.
std::string canonical_code(const Forest& forest);

bool isomorphic(const Forest& a, const Forest& b);

/// Centroid vertices of a tree (one or two).
std::vector<int> centroids(const Forest& tree);

/// Order of the automorphism group of a tree.
BigInt automorphism_count(const Forest& tree);

/// Rooted level sequence (root level 0) with children visited in
/// descending order of their own sequences; this is the canonical rooted
/// form used by the enumerator.
std::vector<int> rooted_canonical_sequence(const Forest& tree, int root);

/// Rebuilds a tree from a level sequence (levels[0] == 0; parent of
/// vertex i is the nearest j < i with levels[j] == levels[i]-1).
Forest tree_from_level_sequence(const std::vector<int>& levels);

}  // namespace treenergy
