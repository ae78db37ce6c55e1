#include "treenergy/extremal.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "treenergy/char_poly.hpp"
#include "treenergy/errors.hpp"

namespace treenergy {

std::vector<TreeSpec> s_n_order(int n) {
  if (n < 7) throw InvalidOrder("the quasi-order list needs n >= 7");
  int k = (n - 3) / 2;
  int t = k / 2;
  int l = (k - 1) / 2;
  std::vector<TreeSpec> out;
  for (int a = 2; a <= 2 * t; a += 2) out.push_back(TreeSpec::starlike(n, {2, a, n - 3 - a}));
  for (int a = 2 * l + 1; a >= 1; a -= 2) out.push_back(TreeSpec::starlike(n, {2, a, n - 3 - a}));
  if (static_cast<int>(out.size()) != k)
    throw InvalidOrder("quasi-order list has unexpected length");
  return out;
}

EnergyCache::EnergyCache(const std::string& dir) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  path_ = dir + "/energies.cache";
  std::ifstream in(path_);
  std::string code, phi;
  double mid, rad;
  while (in >> code >> phi >> mid >> rad) {
    entries_[code] = Entry{phi, mid, rad};
  }
}

bool EnergyCache::lookup(const std::string& code, double tol, EnergyValue& out,
                         std::string& phi_text) const {
  auto it = entries_.find(code);
  if (it == entries_.end() || it->second.radius > tol) return false;
  out = {it->second.midpoint, it->second.radius};
  phi_text = it->second.phi_text;
  return true;
}

void EnergyCache::store(const std::string& code, const std::string& phi_text,
                        const EnergyValue& e) {
  entries_[code] = Entry{phi_text, e.midpoint, e.radius};
  dirty_ = true;
}

void EnergyCache::save() const {
  if (path_.empty() || !dirty_) return;
  std::ofstream out(path_, std::ios::trunc);
  char buf[64];
  for (const auto& [code, e] : entries_) {
    out << code << " " << e.phi_text;
    std::snprintf(buf, sizeof(buf), " %.17g %.17g", e.midpoint, e.radius);
    out << buf << "\n";
  }
  dirty_ = false;
}

namespace {

struct TreeRecord {
  Forest tree;
  std::string code;
  ExactPoly phi;
  std::string phi_text;
  EnergyValue energy;
  double tol = 0;
};

// Energies are computed once per distinct phitilde so cospectral mates
// carry bit-identical values; work is chunked by index so the result is
// independent of the thread count.
void compute_energies(std::vector<TreeRecord>& recs, double tol, int jobs, EnergyCache* cache) {
  std::unordered_map<std::string, std::vector<size_t>> by_phi;
  for (size_t i = 0; i < recs.size(); ++i) by_phi[recs[i].phi_text].push_back(i);

  std::vector<std::string> keys;
  keys.reserve(by_phi.size());
  for (auto& kv : by_phi) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());
  std::vector<EnergyValue> results(keys.size());
  std::vector<char> from_cache(keys.size(), 0);

  for (size_t k = 0; k < keys.size(); ++k) {
    size_t rep = by_phi[keys[k]].front();
    EnergyValue cached;
    std::string phi_text;
    if (cache && cache->enabled() && cache->lookup(recs[rep].code, tol, cached, phi_text) &&
        phi_text == recs[rep].phi_text) {
      results[k] = cached;
      from_cache[k] = 1;
    }
  }

  auto worker = [&](size_t lo, size_t hi) {
    for (size_t k = lo; k < hi; ++k) {
      if (from_cache[k]) continue;
      size_t rep = by_phi[keys[k]].front();
      results[k] = energy(recs[rep].tree, tol);
    }
  };
  int threads = std::max(1, jobs);
  if (threads == 1 || keys.size() < 2) {
    worker(0, keys.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (keys.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      size_t lo = t * chunk, hi = std::min(keys.size(), (t + 1) * chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (size_t k = 0; k < keys.size(); ++k) {
    for (size_t i : by_phi[keys[k]]) {
      recs[i].energy = results[k];
      recs[i].tol = tol;
      if (cache && cache->enabled()) cache->store(recs[i].code, recs[i].phi_text, results[k]);
    }
  }
}

bool overlap(const EnergyValue& a, const EnergyValue& b) {
  return !(a.lower() > b.upper() || b.lower() > a.upper());
}

}  // namespace

std::vector<RankingEntry> rank_by_energy(int n, int top, const RankingOptions& opts) {
  std::vector<Forest> trees = enumerate_trees(n, opts.cap);
  std::vector<TreeRecord> recs(trees.size());
  for (size_t i = 0; i < trees.size(); ++i) {
    recs[i].tree = std::move(trees[i]);
    recs[i].code = canonical_code(recs[i].tree);
    recs[i].phi = phi_tilde(recs[i].tree);
    recs[i].phi_text = recs[i].phi.to_string();
  }
  EnergyCache cache(opts.cache_dir);
  compute_energies(recs, opts.tol, opts.jobs, &cache);

  std::vector<size_t> order(recs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto sort_order = [&] {
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (recs[a].energy.midpoint != recs[b].energy.midpoint)
        return recs[a].energy.midpoint > recs[b].energy.midpoint;
      return recs[a].code < recs[b].code;
    });
  };
  sort_order();

  int want = std::min<int>(top, static_cast<int>(recs.size()));
  // Resolve adjacent overlaps inside (and just past) the returned prefix.
  const double floor_tol = 1e-14;
  for (int restart = 0; restart < 64; ++restart) {
    bool changed = false;
    for (int i = 0; i < want && i + 1 < static_cast<int>(order.size()); ++i) {
      TreeRecord& a = recs[order[i]];
      TreeRecord& b = recs[order[i + 1]];
      if (!overlap(a.energy, b.energy) || a.phi_text == b.phi_text) continue;
      if (a.tol > floor_tol || b.tol > floor_tol) {
        double next_tol = std::max(floor_tol, std::min(a.tol, b.tol) / 1e3);
        a.energy = energy(a.tree, next_tol);
        a.tol = next_tol;
        b.energy = energy(b.tree, next_tol);
        b.tol = next_tol;
        if (cache.enabled()) {
          cache.store(a.code, a.phi_text, a.energy);
          cache.store(b.code, b.phi_text, b.energy);
        }
        changed = true;
        break;
      }
      // radii exhausted: fall back to the exact quasi-order
      QuasiOrderVerdict v = compare(a.phi, b.phi);
      if (v.relation == Relation::Incomparable)
        throw UnresolvedTie("energies of " + a.code + " and " + b.code +
                            " overlap at radius 1e-14 and phitilde are incomparable");
      if (v.relation == Relation::StrictlyLess) {  // a < b energetically: swap
        std::swap(order[i], order[i + 1]);
        changed = true;
        break;
      }
    }
    if (!changed) break;
    sort_order();
  }
  cache.save();

  std::vector<RankingEntry> out;
  std::unordered_map<std::string, int> groups;
  for (int i = 0; i < want; ++i) {
    const TreeRecord& r = recs[order[i]];
    RankingEntry e;
    e.rank = i + 1;
    e.code = r.code;
    e.spec = recognize(r.tree);
    e.energy = r.energy;
    e.phi_tilde = r.phi;
    auto [it, inserted] = groups.emplace(r.phi_text, static_cast<int>(groups.size()));
    e.tie_group = it->second;
    out.push_back(std::move(e));
  }
  return out;
}

PredictedList predicted_top_list(int n) {
  if (n < 31) throw RangeViolation("the predicted top list applies for n >= 31");
  PredictedList out;
  out.n = n;
  out.trees.push_back(TreeSpec::path(n));
  std::vector<TreeSpec> sn = s_n_order(n);
  sn.resize(sn.size() - 3);  // drop P_n(2,5,*), P_n(2,3,*), P_n(2,1,*)
  for (auto& s : sn) out.trees.push_back(std::move(s));
  if (static_cast<int>(out.trees.size()) != (n - 7) / 2)
    throw VerificationFailure("predicted list has unexpected length");
  return out;
}

PrefixReport check_against_bruteforce(int n, const RankingOptions& opts) {
  std::vector<TreeSpec> predicted{TreeSpec::path(n)};
  for (auto& s : s_n_order(n)) predicted.push_back(std::move(s));

  PrefixReport rep;
  rep.n = n;
  int want = static_cast<int>(predicted.size());
  std::vector<RankingEntry> brute = rank_by_energy(n, want, opts);
  want = std::min<int>(want, static_cast<int>(brute.size()));
  rep.compared = want;

  std::vector<Forest> predicted_trees;
  predicted_trees.reserve(want);
  for (int i = 0; i < want; ++i) predicted_trees.push_back(build(predicted[i]));

  // Positions match up to reordering within a phitilde tie group.
  std::vector<int> matched_with(want, -1);
  std::vector<bool> used(brute.size(), false);
  for (int i = 0; i < want; ++i) {
    int g = brute[i].tie_group;
    int lo = i, hi = i;
    while (lo > 0 && brute[lo - 1].tie_group == g) --lo;
    while (hi + 1 < static_cast<int>(brute.size()) && brute[hi + 1].tie_group == g) ++hi;
    std::string want_code = canonical_code(predicted_trees[i]);
    for (int j = lo; j <= hi; ++j) {
      if (!used[j] && brute[j].code == want_code) {
        used[j] = true;
        matched_with[i] = j;
        break;
      }
    }
  }
  while (rep.agree_prefix < want && matched_with[rep.agree_prefix] >= 0) ++rep.agree_prefix;
  rep.full_agreement = rep.agree_prefix == rep.compared;

  std::ostringstream os;
  os << "brute-force ranking vs predicted order at n=" << n << "\n";
  char buf[64];
  for (int i = 0; i < want; ++i) {
    std::snprintf(buf, sizeof(buf), "%.9f", brute[i].energy.midpoint);
    os << "  rank " << (i + 1) << ": " << (brute[i].spec ? brute[i].spec->to_string() : brute[i].code)
       << " E=" << buf << "  predicted " << predicted[i].to_string() << "  "
       << (matched_with[i] >= 0 ? "agree" : "differ") << "\n";
  }
  os << "  agreeing prefix: " << rep.agree_prefix << " of " << rep.compared << "\n";
  rep.text = os.str();
  return rep;
}

namespace {

// Deepest branch vertex (degree >= 3) other than `keep` whose subtree
// away from `keep` contains no further branch vertex.
int outermost_branch_vertex(const Forest& t, int keep) {
  int n = t.order();
  std::vector<int> parent(n, -2), depth(n, 0), bfs{keep};
  parent[keep] = -1;
  for (size_t i = 0; i < bfs.size(); ++i) {
    int v = bfs[i];
    for (int w : t.adjacency()[v]) {
      if (parent[w] == -2) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        bfs.push_back(w);
      }
    }
  }
  int best = -1;
  for (int v = 0; v < n; ++v) {
    if (v == keep || t.degree(v) < 3) continue;
    if (best < 0 || depth[v] > depth[best] || (depth[v] == depth[best] && v < best)) {
      // deepest branch vertices have no branch descendants
      bool clean = true;
      std::vector<int> stack{v};
      std::vector<bool> seen(n, false);
      seen[v] = true;
      while (!stack.empty() && clean) {
        int x = stack.back();
        stack.pop_back();
        for (int w : t.adjacency()[x]) {
          if (w == parent[x] || seen[w]) continue;
          if (t.degree(w) >= 3) clean = false;
          seen[w] = true;
          stack.push_back(w);
        }
      }
      if (clean) best = v;
    }
  }
  return best;
}

}  // namespace

Forest reduce_branch_vertex(const Forest& t) {
  if (!t.is_tree()) throw NotConnected("branch reduction requires a tree");
  int n = t.order();
  std::vector<int> branch;
  int delta = 0;
  for (int v = 0; v < n; ++v) {
    delta = std::max(delta, t.degree(v));
    if (t.degree(v) >= 3) branch.push_back(v);
  }
  if (branch.size() < 2) throw InvalidSpec("branch reduction needs at least two branch vertices");
  int keep = branch[0];
  int delta_count = 0;
  for (int v : branch) {
    if (t.degree(v) == delta) {
      ++delta_count;
      keep = v;
    }
  }
  if (delta_count > 1) keep = branch[0];

  Forest cur = t;
  int w = outermost_branch_vertex(cur, keep);
  while (cur.degree(w) > 2) {
    // walk the pendant arms hanging off w (away from keep)
    std::vector<int> parent(cur.order(), -2), bfs{keep};
    parent[keep] = -1;
    for (size_t i = 0; i < bfs.size(); ++i) {
      for (int x : cur.adjacency()[bfs[i]]) {
        if (parent[x] == -2) {
          parent[x] = bfs[i];
          bfs.push_back(x);
        }
      }
    }
    std::vector<std::vector<int>> arms;
    for (int s : cur.adjacency()[w]) {
      if (s == parent[w]) continue;
      std::vector<int> arm{s};
      int prev = w, curv = s;
      while (cur.degree(curv) == 2) {
        for (int x : cur.adjacency()[curv]) {
          if (x != prev) {
            arm.push_back(x);
            prev = curv;
            curv = x;
            break;
          }
        }
      }
      arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const std::vector<int>& keep_arm = arms[0];
    const std::vector<int>& move_arm = arms[1];
    std::vector<std::pair<int, int>> edges;
    for (auto e : cur.edges()) {
      if ((e.first == w && e.second == move_arm[0]) || (e.second == w && e.first == move_arm[0]))
        continue;
      edges.push_back(e);
    }
    edges.emplace_back(keep_arm.back(), move_arm[0]);
    cur = Forest::from_edges(cur.order(), std::move(edges));
  }
  return cur;
}

GraftingReport grafting_property_check(int n) {
  GraftingReport rep;
  std::ostringstream os;
  auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

  // same-vertex grafting parity rule over small bases and all splits
  struct Base {
    Forest g;
    int u;
    std::string name;
  };
  std::vector<Base> bases{
      {Forest::path(2), 0, "P2@end"},
      {Forest::path(3), 0, "P3@end"},
      {Forest::path(3), 1, "P3@mid"},
      {Forest::path(5), 2, "P5@mid"},
      {build(TreeSpec::starlike(4, {1, 1, 1})), 0, "star4@center"},
      {build(TreeSpec::starlike(6, {2, 2, 1})), 3, "S(6;2,2,1)@arm"},
  };
  for (const Base& base : bases) {
    for (int s = 2; s <= 7; ++s) {
      for (int a = 0; 2 * a <= s; ++a) {
        for (int c = a + 1; 2 * c <= s; ++c) {
          int b = s - a, d = s - c;
          Relation expected = (a % 2 == 0) ? Relation::StrictlyGreater : Relation::StrictlyLess;
          Relation got =
              compare_trees(graft_pair(base.g, base.u, a, b), graft_pair(base.g, base.u, c, d))
                  .relation;
          ++rep.same_vertex_cases;
          if (got != expected) {
            fail("same-vertex grafting " + base.name + " (a,b,c,d)=(" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) +
                 "): got " + relation_name(got));
          }
        }
      }
    }
  }

  // two-vertex grafting on symmetric bases; both hypotheses are checked
  struct Base2 {
    Forest g;
    int u, v;
    std::string name;
  };
  std::vector<Base2> bases2{
      {Forest::path(2), 0, 1, "P2@ends"},
      {Forest::path(4), 0, 3, "P4@ends"},
      {Forest::path(5), 0, 4, "P5@ends"},
      {build(TreeSpec::double_broom(8, 1, 1, 1, 1)), 2, 3, "T(8;1,1|1,1)@branches"},
  };
  for (const Base2& base : bases2) {
    bool symmetric = true;
    for (auto [p, q] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
      if (!isomorphic(graft_two_vertices(base.g, base.u, base.v, p, q),
                      graft_two_vertices(base.g, base.u, base.v, q, p)))
        symmetric = false;
    }
    if (!symmetric) {
      fail("two-vertex base " + base.name + " is not (p,q)-symmetric");
      continue;
    }
    Relation hyp = compare_trees(graft_two_vertices(base.g, base.u, base.v, 0, 2),
                                 graft_two_vertices(base.g, base.u, base.v, 1, 1))
                       .relation;
    if (hyp != Relation::StrictlyGreater) {
      fail("two-vertex base " + base.name + " fails the (0,2) > (1,1) hypothesis");
      continue;
    }
    for (int s = 2; s <= 7; ++s) {
      for (int a = 0; 2 * a <= s; ++a) {
        for (int c = a + 1; 2 * c <= s; ++c) {
          int b = s - a, d = s - c;
          Relation expected = (a % 2 == 0) ? Relation::StrictlyGreater : Relation::StrictlyLess;
          Relation got = compare_trees(graft_two_vertices(base.g, base.u, base.v, a, b),
                                       graft_two_vertices(base.g, base.u, base.v, c, d))
                             .relation;
          ++rep.two_vertex_cases;
          if (got != expected) {
            fail("two-vertex grafting " + base.name + " (a,b,c,d)=(" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) +
                 "): got " + relation_name(got));
          }
        }
      }
    }
  }

  // branch-vertex reduction across the full enumeration at order n
  for (const Forest& t : enumerate_trees(n)) {
    TreeClassification c = classify(t);
    if (c.n3 < 2) continue;
    ++rep.reduction_cases;
    Forest reduced = reduce_branch_vertex(t);
    TreeClassification rc = classify(reduced);
    if (rc.n3 != c.n3 - 1 || rc.max_degree != c.max_degree ||
        compare_trees(t, reduced).relation != Relation::StrictlyLess) {
      fail("branch reduction failed for " + canonical_code(t));
    }
  }

  os << "grafting checks: " << rep.same_vertex_cases << " same-vertex, " << rep.two_vertex_cases
     << " two-vertex, " << rep.reduction_cases << " branch reductions at n=" << n << "; "
     << rep.failures.size() << " failures\n";
  for (const auto& f : rep.failures) os << "  FAIL " << f << "\n";
  rep.text = os.str();
  return rep;
}

}  // namespace treenergy
