#pragma once

#include <vector>

#include "treenergy/exact_poly.hpp"
#include "treenergy/forest.hpp"

namespace treenergy {

/// phi(G,x) = det(xI - A) and its absolute-coefficient companion
/// phitilde. For a forest the phitilde coefficient of x^(n-2i) is the
/// i-matching count m(G,i) and all other coefficients vanish.
struct CharPolyPair {
  ExactPoly phi;
  ExactPoly phi_tilde;
  int n = 0;
};

/// m(G,0..floor(n/2)) by rooted-tree dynamic programming, O(n^2).
std::vector<BigInt> matching_counts(const Forest& f);

/// Same counts by the edge recurrence m(G,i) = m(G-e,i) + m(G-u-v,i-1).
/// Exponential; kept as an independent cross-check.
std::vector<BigInt> matching_counts_by_deletion(const Forest& f);

CharPolyPair char_poly_pair(const Forest& f);
ExactPoly phi_tilde(const Forest& f);

/// P(y) with P(lambda^2) carrying the nonzero spectrum: for n even
/// phi(x) = P(x^2), for odd phi(x) = x P(x^2). Positive roots of P are
/// the squared positive eigenvalues with matching multiplicities.
ExactPoly squared_eigenvalue_poly(const Forest& f);

/// Checks phi(G) == phi(G-uv) - phi(G-u-v) exactly for a cut edge uv.
bool cut_edge_identity_check(const Forest& g, CutEdge uv);

/// [phitilde(G(0)), ..., phitilde(G(kmax))]: entries 0 and 1 from the
/// constructed graphs, the rest by phitilde(G(k+2)) = x phitilde(G(k+1))
/// + phitilde(G(k)). With validate, entry kmax is recomputed from the
/// constructed graph and must match exactly.
std::vector<ExactPoly> subdiv_phi_tilde_sequence(const Forest& g, CutEdge e, int kmax,
                                                 bool validate = false);

}  // namespace treenergy
