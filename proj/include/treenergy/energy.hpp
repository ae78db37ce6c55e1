#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treenergy/exact_poly.hpp"
#include "treenergy/forest.hpp"
#include "treenergy/root_isolation.hpp"

namespace treenergy {

/// Certified real: the true value lies in [midpoint-radius, midpoint+radius].
struct EnergyValue {
  double midpoint = 0;
  double radius = 0;
  double lower() const { return midpoint - radius; }
  double upper() const { return midpoint + radius; }
};

struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// Graph energy (sum of absolute eigenvalues) as an exact rational
/// enclosure of width <= tol, from isolated roots of the squared
/// eigenvalue polynomial with multiplicities recovered by square-free
/// decomposition.
RationalInterval energy_interval(const Forest& f, const Rational& tol);
EnergyValue energy(const Forest& f, double tol = 1e-9);

/// E(G1) - E(G2) for equal-order bipartite graphs via the real integral
/// (2/pi) int_0^inf ln(phitilde1/phitilde2) dx, mapped to (0,1) and
/// integrated adaptively. Both polynomials must be monic of equal degree
/// with nonnegative coefficients. Throws QuadratureFailure.
EnergyValue energy_diff_coulson(const ExactPoly& p1, const ExactPoly& p2, double tol = 1e-7);

/// d_k(x) = h_k(x)/g_k(x) where both sequences follow
/// v_{k} = x v_{k-1} + v_{k-2} from the supplied base values; exact.
Rational d_sequence_at(const ExactPoly& g0, const ExactPoly& g1, const ExactPoly& h0,
                       const ExactPoly& h1, int k, const Rational& x);

enum class DominanceMode { Thm31Case1, Thm31Case2, Thm32Bound, Inconclusive };

const char* dominance_mode_name(DominanceMode m);

/// Outcome of the subdivision-family energy comparison. The certified
/// claim is: E(H(k)) - E(G(k)) >= gap_lower_bound for every k in
/// `range` (strictly, for the Thm31 modes, away from the base index).
struct DominanceResult {
  DominanceMode mode = DominanceMode::Inconclusive;
  ExactPoly w;             // h1 g0 - h0 g1
  SignProfile w_profile;
  int base_index = 0;      // 0 or 1: which base gap the bound builds on
  EnergyValue base_gap;    // E(H(base)) - E(G(base))
  EnergyValue gap_lower_bound;
  bool strict = false;     // bound is strict away from the base index
  std::string range;       // "k>=0", "k!=1"
  double integral_correction = 0;  // (2/pi) int_D ln(d1/d0), <= 0
  std::vector<std::pair<IsolatingInterval, IsolatingInterval>> D;

  /// True when the bound certifies E(H(k)) > E(G(k)) over the range.
  bool certifies_positive_gap() const;
  std::string to_text() const;
};

/// Classifies the pair of subdivision families by the exact sign of
/// w = h1 g0 - h0 g1 on (0, inf):
///   w >= 0 everywhere: gap(k) >= gap(0), strict for k > 0;
///   w <= 0 everywhere: gap(k) >= gap(1), strict for k != 1;
///   mixed: gap(k) >= gap(0) + (2/pi) int_D ln(d1/d0) for all k, where
///     D = {x > 0 : w(x) < 0}; reported Inconclusive when that bound is
///     not radius-separated above zero.
DominanceResult classify_dominance(const Forest& g, CutEdge eg, const Forest& h, CutEdge eh,
                                   double tol = 1e-7);

}  // namespace treenergy
