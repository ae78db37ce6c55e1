#include "treenergy/enumerate.hpp"

#include <numeric>
#include <unordered_set>

#include "treenergy/errors.hpp"

namespace treenergy {

FreeTreeEnumerator::FreeTreeEnumerator(int n, int cap) : n_(n) {
  if (n < 1) throw InvalidSpec("enumeration order must be positive");
  if (n > cap) throw CapExceeded("tree enumeration capped at n=" + std::to_string(cap));
  levels_.resize(n);
  std::iota(levels_.begin(), levels_.end(), 0);  // path: the lex-largest sequence
}

bool FreeTreeEnumerator::advance() {
  // successor in the canonical rooted level-sequence order: find the
  // last vertex deeper than level 1, lift it to its parent's level and
  // repeat the block from there on
  int p = -1;
  for (int i = n_ - 1; i >= 1; --i) {
    if (levels_[i] >= 2) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (levels_[i] == levels_[p] - 1) {
      q = i;
      break;
    }
  }
  for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
  return true;
}

bool FreeTreeEnumerator::accept() const {
  if (n_ <= 2) return true;
  Forest t = tree_from_level_sequence(levels_);
  std::vector<int> cs = centroids(t);
  // cheap reject: the generated root must itself be a centroid
  bool root_is_centroid = false;
  for (int c : cs) {
    if (c == 0) root_is_centroid = true;
  }
  if (!root_is_centroid) return false;
  return canonical_level_sequence(t) == levels_;
}

std::optional<Forest> FreeTreeEnumerator::next() {
  if (done_) return std::nullopt;
  while (true) {
    if (fresh_) {
      fresh_ = false;
    } else if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    if (accept()) return tree_from_level_sequence(levels_);
  }
}

std::vector<Forest> enumerate_trees(int n, int cap) {
  FreeTreeEnumerator en(n, cap);
  std::vector<Forest> out;
  while (auto t = en.next()) out.push_back(std::move(*t));
  return out;
}

std::uint64_t free_tree_count(int n, int cap) {
  FreeTreeEnumerator en(n, cap);
  std::uint64_t count = 0;
  while (en.next()) ++count;
  return count;
}

Forest tree_from_pruefer(const std::vector<int>& seq, int n) {
  if (n < 2 || static_cast<int>(seq.size()) != n - 2)
    throw InvalidSpec("Pruefer sequence must have length n-2");
  std::vector<int> deg(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) throw InvalidSpec("Pruefer entry out of range");
    ++deg[v];
  }
  // smallest-leaf elimination, quadratic but only used at small n
  std::vector<std::pair<int, int>> edges;
  for (int v : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (deg[leaf] == 1) {
        edges.emplace_back(leaf, v);
        deg[leaf] = 0;
        --deg[v];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) (a < 0 ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return Forest::from_edges(n, std::move(edges));
}

std::uint64_t pruefer_distinct_tree_count(int n) {
  if (n > 9) throw CapExceeded("exhaustive Pruefer oracle capped at n=9");
  if (n == 1 || n == 2) return 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= n;
  std::unordered_set<std::string> codes;
  std::vector<int> seq(n - 2, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < n - 2; ++i) {
      seq[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    codes.insert(canonical_code(tree_from_pruefer(seq, n)));
  }
  return codes.size();
}

bool labeled_count_identity(int n, int cap) {
  if (n < 1) throw InvalidSpec("order must be positive");
  if (n == 1 || n == 2) return free_tree_count(n, cap) == 1;
  BigInt nfact;
  mpz_fac_ui(nfact.get_mpz_t(), n);
  BigInt sum(0);
  FreeTreeEnumerator en(n, cap);
  while (auto t = en.next()) {
    sum += nfact / automorphism_count(*t);
  }
  BigInt expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), n, n - 2);
  return sum == expected;
}

}  // namespace treenergy
