#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treenergy/forest.hpp"

namespace treenergy {

inline constexpr int kDefaultEnumerationCap = 20;

/// Streams exactly one representative per isomorphism class of free
/// trees on n vertices, in a fixed deterministic order. Rooted level
/// sequences are generated by the canonical successor rule and a tree is
/// emitted when its sequence equals the centroid-rooted canonical form,
/// so every free tree appears exactly once.
class FreeTreeEnumerator {
 public:
  explicit FreeTreeEnumerator(int n, int cap = kDefaultEnumerationCap);  // CapExceeded
  std::optional<Forest> next();

 private:
  bool advance();  // successor rule; false when exhausted
  bool accept() const;

  int n_;
  std::vector<int> levels_;
  bool fresh_ = true;
  bool done_ = false;
};

std::vector<Forest> enumerate_trees(int n, int cap = kDefaultEnumerationCap);
std::uint64_t free_tree_count(int n, int cap = kDefaultEnumerationCap);

/// Decodes a Pruefer sequence over {0..n-1} (length n-2) into a tree.
Forest tree_from_pruefer(const std::vector<int>& seq, int n);

/// Number of distinct canonical codes over all n^(n-2) labeled trees.
/// Exhaustive; refuses n > 9.
std::uint64_t pruefer_distinct_tree_count(int n);

/// Checks sum over enumerated trees of n!/|Aut(T)| == n^(n-2), i.e. the
/// enumeration covers every labeled tree exactly once.
bool labeled_count_identity(int n, int cap = kDefaultEnumerationCap);

}  // namespace treenergy
