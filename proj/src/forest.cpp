#include "treenergy/forest.hpp"

#include <algorithm>
#include <numeric>

#include "treenergy/errors.hpp"

namespace treenergy {

namespace {

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

Forest Forest::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw InvalidSpec("forest order must be positive");
  Forest f;
  f.n_ = n;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw VertexNotPresent("edge endpoint out of range");
    if (u == v) throw NotAForest("self-loop");
    std::tie(u, v) = norm_edge(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw NotAForest("duplicate edge");

  // union-find acyclicity check
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru == rv) throw NotAForest("cycle detected");
    parent[ru] = rv;
  }

  f.edges_ = std::move(edges);
  f.adj_.assign(n, {});
  for (auto [u, v] : f.edges_) {
    f.adj_[u].push_back(v);
    f.adj_[v].push_back(u);
  }
  for (auto& nb : f.adj_) std::sort(nb.begin(), nb.end());
  return f;
}

Forest Forest::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, std::move(e));
}

int Forest::degree(int v) const {
  if (!has_vertex(v)) throw VertexNotPresent("vertex out of range");
  return static_cast<int>(adj_[v].size());
}

bool Forest::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  auto e = norm_edge(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<int>> Forest::components() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n_, false);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Forest Forest::remove_edge(CutEdge e) const {
  if (!has_edge(e.u, e.v)) throw EdgeNotPresent("edge not in forest");
  auto ne = norm_edge(e.u, e.v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size() - 1);
  for (auto& p : edges_) {
    if (p != ne) edges.push_back(p);
  }
  return from_edges(n_, std::move(edges));
}

Forest Forest::remove_vertex_pair(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) throw VertexNotPresent("vertex out of range");
  if (u == v) throw SameVertex("vertices must differ");
  if (n_ == 2) throw InvalidSpec("cannot remove all vertices");
  std::vector<int> relabel(n_, -1);
  int next = 0;
  for (int i = 0; i < n_; ++i) {
    if (i != u && i != v) relabel[i] = next++;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : edges_) {
    if (a == u || a == v || b == u || b == v) continue;
    edges.emplace_back(relabel[a], relabel[b]);
  }
  return from_edges(n_ - 2, std::move(edges));
}

Forest Forest::disjoint_union(const Forest& other) const {
  std::vector<std::pair<int, int>> edges = edges_;
  for (auto [u, v] : other.edges_) edges.emplace_back(u + n_, v + n_);
  return from_edges(n_ + other.n_, std::move(edges));
}

Forest subdivide(const Forest& g, CutEdge e, int k) {
  if (!g.has_edge(e.u, e.v)) throw EdgeNotPresent("subdivision edge not in forest");
  if (k < 0) throw InvalidSpec("subdivision count must be nonnegative");
  if (k == 0) return g;
  int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
  int n = g.order();
  std::vector<std::pair<int, int>> edges;
  for (auto& p : g.edges()) {
    if (p != std::pair<int, int>{u, v}) edges.push_back(p);
  }
  int prev = u;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(prev, n + i);
    prev = n + i;
  }
  edges.emplace_back(prev, v);
  return Forest::from_edges(n + k, std::move(edges));
}

Forest graft_pair(const Forest& g, int u, int a, int b) {
  if (!g.has_vertex(u)) throw VertexNotPresent("graft vertex out of range");
  if (a < 0 || b < 0) throw InvalidSpec("pendant path lengths must be nonnegative");
  int n = g.order();
  std::vector<std::pair<int, int>> edges = g.edges();
  int prev = u;
  for (int i = 0; i < a; ++i) {
    edges.emplace_back(prev, n + i);
    prev = n + i;
  }
  prev = u;
  for (int i = 0; i < b; ++i) {
    edges.emplace_back(prev, n + a + i);
    prev = n + a + i;
  }
  return Forest::from_edges(n + a + b, std::move(edges));
}

Forest graft_two_vertices(const Forest& g, int u, int v, int a, int b) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw VertexNotPresent("graft vertex out of range");
  if (u == v) throw SameVertex("graft vertices must differ");
  if (a < 0 || b < 0) throw InvalidSpec("pendant path lengths must be nonnegative");
  Forest with_a = graft_pair(g, u, a, 0);
  return graft_pair(with_a, v, b, 0);
}

TreeClassification classify(const Forest& t) {
  if (!t.is_tree()) throw NotConnected("classification requires a tree");
  int n = t.order();
  TreeClassification c;
  c.n3 = 0;
  c.max_degree = 0;
  int center = -1;
  for (int v = 0; v < n; ++v) {
    int d = t.degree(v);
    c.max_degree = std::max(c.max_degree, d);
    if (d >= 3) {
      ++c.n3;
      center = v;
    }
  }
  if (c.n3 == 0) {
    c.tree_class = TreeClass::C1;
    return c;
  }
  if (c.n3 >= 2) {
    c.tree_class = TreeClass::C5;
    return c;
  }
  // starlike: walk each pendant path from the unique branch vertex
  for (int start : t.adjacency()[center]) {
    int len = 1, prev = center, cur = start;
    while (t.degree(cur) == 2) {
      for (int w : t.adjacency()[cur]) {
        if (w != prev) {
          prev = cur;
          cur = w;
          break;
        }
      }
      ++len;
    }
    c.arms.push_back(len);
  }
  std::sort(c.arms.rbegin(), c.arms.rend());
  if (c.max_degree >= 4) {
    c.tree_class = TreeClass::C4;
  } else if (std::find(c.arms.begin(), c.arms.end(), 2) != c.arms.end()) {
    c.tree_class = TreeClass::C2;
  } else {
    c.tree_class = TreeClass::C3;
  }
  return c;
}

const char* tree_class_name(TreeClass c) {
  switch (c) {
    case TreeClass::C1: return "C1";
    case TreeClass::C2: return "C2";
    case TreeClass::C3: return "C3";
    case TreeClass::C4: return "C4";
    case TreeClass::C5: return "C5";
  }
  return "?";
}

namespace {

// Subtree level sequence of v (level of v itself is 0), children ordered
// by descending subtree sequence; this makes the result the lex-maximal
// level sequence of the rooted subtree.
std::vector<int> subtree_sequence(const Forest& t, int v, int parent) {
  std::vector<std::vector<int>> child_seqs;
  for (int w : t.adjacency()[v]) {
    if (w == parent) continue;
    child_seqs.push_back(subtree_sequence(t, w, v));
  }
  std::sort(child_seqs.begin(), child_seqs.end(), std::greater<>());
  std::vector<int> seq{0};
  for (const auto& cs : child_seqs) {
    for (int l : cs) seq.push_back(l + 1);
  }
  return seq;
}

std::string parens_from_levels(const std::vector<int>& levels) {
  std::string s;
  int depth = -1;
  for (int l : levels) {
    while (depth >= l) {
      s += ')';
      --depth;
    }
    s += '(';
    depth = l;
  }
  while (depth >= 0) {
    s += ')';
    --depth;
  }
  return s;
}

// Restriction of a forest to one component, relabeled 0..k-1 in the
// order the vertices appear in comp (must be sorted).
Forest component_subtree(const Forest& f, const std::vector<int>& comp) {
  std::vector<int> relabel(f.order(), -1);
  for (size_t i = 0; i < comp.size(); ++i) relabel[comp[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : f.edges()) {
    if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
  }
  return Forest::from_edges(static_cast<int>(comp.size()), std::move(edges));
}

}  // namespace

std::vector<int> rooted_canonical_sequence(const Forest& tree, int root) {
  if (!tree.has_vertex(root)) throw VertexNotPresent("root out of range");
  return subtree_sequence(tree, root, -1);
}

std::vector<int> centroids(const Forest& tree) {
  if (!tree.is_tree()) throw NotConnected("centroid requires a tree");
  int n = tree.order();
  if (n == 1) return {0};
  std::vector<int> size(n, 1), order, parent(n, -1);
  order.reserve(n);
  order.push_back(0);
  parent[0] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : tree.adjacency()[v]) {
      if (parent[w] == -1 && w != 0) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  int best = n + 1;
  std::vector<int> cs;
  for (int v = 0; v < n; ++v) {
    int worst = n - size[v];
    for (int w : tree.adjacency()[v]) {
      if (parent[w] == v && w != 0) worst = std::max(worst, size[w]);
    }
    if (worst < best) {
      best = worst;
      cs = {v};
    } else if (worst == best) {
      cs.push_back(v);
    }
  }
  return cs;
}

std::vector<int> canonical_level_sequence(const Forest& tree) {
  if (!tree.is_tree()) throw NotConnected("canonical level sequence requires a tree");
  std::vector<int> best;
  for (int c : centroids(tree)) {
    std::vector<int> seq = rooted_canonical_sequence(tree, c);
    if (seq > best) best = std::move(seq);
  }
  return best;
}

std::string canonical_code(const Forest& forest) {
  std::vector<std::string> parts;
  for (const auto& comp : forest.components()) {
    Forest sub = component_subtree(forest, comp);
    parts.push_back(parens_from_levels(canonical_level_sequence(sub)));
  }
  std::sort(parts.rbegin(), parts.rend());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

bool isomorphic(const Forest& a, const Forest& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

namespace {

// Returns (canonical subtree sequence, automorphism count of the rooted
// subtree). Children with identical sequences may be permuted freely.
std::pair<std::vector<int>, BigInt> rooted_aut(const Forest& t, int v, int parent) {
  std::vector<std::pair<std::vector<int>, BigInt>> kids;
  for (int w : t.adjacency()[v]) {
    if (w == parent) continue;
    kids.push_back(rooted_aut(t, w, v));
  }
  std::sort(kids.begin(), kids.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  BigInt aut(1);
  std::vector<int> seq{0};
  size_t i = 0;
  while (i < kids.size()) {
    size_t j = i;
    while (j < kids.size() && kids[j].first == kids[i].first) ++j;
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), j - i);
    aut *= fact;
    for (size_t k = i; k < j; ++k) aut *= kids[k].second;
    i = j;
  }
  for (const auto& kid : kids) {
    for (int l : kid.first) seq.push_back(l + 1);
  }
  return {std::move(seq), std::move(aut)};
}

}  // namespace

BigInt automorphism_count(const Forest& tree) {
  if (!tree.is_tree()) throw NotConnected("automorphism count requires a tree");
  std::vector<int> cs = centroids(tree);
  if (cs.size() == 1) return rooted_aut(tree, cs[0], -1).second;
  // bicentral: automorphisms fix or swap the two halves across the
  // central edge
  auto a1 = rooted_aut(tree, cs[0], cs[1]);
  auto a2 = rooted_aut(tree, cs[1], cs[0]);
  BigInt total = a1.second * a2.second;
  if (a1.first == a2.first) total *= 2;
  return total;
}

Forest tree_from_level_sequence(const std::vector<int>& levels) {
  if (levels.empty() || levels[0] != 0) throw InvalidSpec("level sequence must start at 0");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> stack{0};  // stack[l] = current vertex at level l
  for (int i = 1; i < static_cast<int>(levels.size()); ++i) {
    int l = levels[i];
    if (l < 1 || l > static_cast<int>(stack.size()))
      throw InvalidSpec("level sequence jumps more than one level");
    stack.resize(l);
    edges.emplace_back(stack.back(), i);
    stack.push_back(i);
  }
  return Forest::from_edges(static_cast<int>(levels.size()), std::move(edges));
}

}  // namespace treenergy
