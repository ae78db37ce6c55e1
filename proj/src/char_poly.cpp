#include "treenergy/char_poly.hpp"

#include <algorithm>

#include "treenergy/errors.hpp"

namespace treenergy {

namespace {

// Matching generating polynomial sum m(G,i) y^i of one rooted component.
// Two states per vertex: u = matchings of the subtree with the root
// unmatched, m = root matched to one of its children.
struct MatchDP {
  const Forest& f;
  explicit MatchDP(const Forest& forest) : f(forest) {}

  std::pair<ExactPoly, ExactPoly> run(int v, int parent) const {
    std::vector<ExactPoly> child_total;  // u + m per child
    std::vector<ExactPoly> child_u;
    for (int w : f.adjacency()[v]) {
      if (w == parent) continue;
      auto [cu, cm] = run(w, v);
      child_u.push_back(cu);
      child_total.push_back(cu + cm);
    }
    size_t k = child_total.size();
    ExactPoly u = ExactPoly::constant(1);
    for (const ExactPoly& t : child_total) u = u * t;
    if (k == 0) return {u, ExactPoly()};
    // prefix/suffix products of child totals
    std::vector<ExactPoly> pre(k + 1, ExactPoly::constant(1)), suf(k + 1, ExactPoly::constant(1));
    for (size_t i = 0; i < k; ++i) pre[i + 1] = pre[i] * child_total[i];
    for (size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * child_total[i];
    ExactPoly m;
    const ExactPoly y = ExactPoly::variable();
    for (size_t i = 0; i < k; ++i) {
      m = m + y * child_u[i] * pre[i] * suf[i + 1];
    }
    return {u, m};
  }
};

}  // namespace

std::vector<BigInt> matching_counts(const Forest& f) {
  MatchDP dp(f);
  ExactPoly total = ExactPoly::constant(1);
  for (const auto& comp : f.components()) {
    auto [u, m] = dp.run(comp[0], -1);
    total = total * (u + m);
  }
  std::vector<BigInt> out(f.order() / 2 + 1, BigInt(0));
  for (int i = 0; i <= total.degree(); ++i) out[i] = total.coeff(i);
  return out;
}

std::vector<BigInt> matching_counts_by_deletion(const Forest& f) {
  std::vector<BigInt> out(f.order() / 2 + 1, BigInt(0));
  if (f.edge_count() == 0) {
    out[0] = 1;
    return out;
  }
  auto [u, v] = f.edges().front();
  Forest without_edge = f.remove_edge({u, v});
  Forest without_ends = f.remove_vertex_pair(u, v);
  std::vector<BigInt> a = matching_counts_by_deletion(without_edge);
  std::vector<BigInt> b = matching_counts_by_deletion(without_ends);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
  return out;
}

CharPolyPair char_poly_pair(const Forest& f) {
  std::vector<BigInt> m = matching_counts(f);
  int n = f.order();
  std::vector<BigInt> phi(n + 1, BigInt(0)), phit(n + 1, BigInt(0));
  for (size_t i = 0; i < m.size(); ++i) {
    int power = n - 2 * static_cast<int>(i);
    if (power < 0) break;
    phit[power] = m[i];
    phi[power] = (i % 2 == 0) ? m[i] : -m[i];
  }
  return {ExactPoly(std::move(phi)), ExactPoly(std::move(phit)), n};
}

ExactPoly phi_tilde(const Forest& f) { return char_poly_pair(f).phi_tilde; }

ExactPoly squared_eigenvalue_poly(const Forest& f) {
  std::vector<BigInt> m = matching_counts(f);
  int h = f.order() / 2;
  std::vector<BigInt> p(h + 1, BigInt(0));
  for (int i = 0; i <= h; ++i) {
    p[h - i] = (i % 2 == 0) ? m[i] : -m[i];
  }
  return ExactPoly(std::move(p));
}

bool cut_edge_identity_check(const Forest& g, CutEdge uv) {
  if (!g.has_edge(uv.u, uv.v)) throw EdgeNotPresent("cut edge not in forest");
  ExactPoly lhs = char_poly_pair(g).phi;
  ExactPoly a = char_poly_pair(g.remove_edge(uv)).phi;
  ExactPoly b = char_poly_pair(g.remove_vertex_pair(uv.u, uv.v)).phi;
  return lhs == a - b;
}

std::vector<ExactPoly> subdiv_phi_tilde_sequence(const Forest& g, CutEdge e, int kmax,
                                                 bool validate) {
  if (!g.has_edge(e.u, e.v)) throw EdgeNotPresent("subdivision edge not in forest");
  if (kmax < 0) throw InvalidSpec("kmax must be nonnegative");
  std::vector<ExactPoly> seq;
  seq.reserve(kmax + 1);
  seq.push_back(phi_tilde(g));
  if (kmax >= 1) seq.push_back(phi_tilde(subdivide(g, e, 1)));
  const ExactPoly x = ExactPoly::variable();
  for (int k = 2; k <= kmax; ++k) {
    seq.push_back(x * seq[k - 1] + seq[k - 2]);
  }
  if (validate && kmax >= 2) {
    ExactPoly direct = phi_tilde(subdivide(g, e, kmax));
    if (direct != seq[kmax])
      throw VerificationFailure("subdivision recurrence mismatch at k=" + std::to_string(kmax));
  }
  return seq;
}

}  // namespace treenergy
