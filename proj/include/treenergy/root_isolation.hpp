#pragma once

#include <utility>
#include <vector>

#include "treenergy/exact_poly.hpp"

namespace treenergy {

/// Interval (lo, hi] with exact rational endpoints certified to contain
/// exactly one real root of the referenced polynomial. A point interval
/// (lo == hi) marks a root found exactly.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Sturm-sequence root isolation for one polynomial. The chain is built
/// once on the square-free part; all queries are exact.
class RootIsolator {
 public:
  explicit RootIsolator(const ExactPoly& p);  // throws ZeroPolynomial

  const ExactPoly& square_free_part() const { return squarefree_; }
  const std::vector<ExactPoly>& chain() const { return chain_; }

  /// Number of distinct real roots in (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  int count_positive() const;

  /// Disjoint intervals covering the distinct positive roots, one root
  /// each, in ascending order. Every non-point interval has lo > 0 and
  /// opposite signs of the square-free part at its endpoints.
  std::vector<IsolatingInterval> isolate_positive_roots() const;

  /// Bisects until width <= tol. Point intervals are returned unchanged.
  IsolatingInterval refine(IsolatingInterval iv, const Rational& tol) const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_pos_infinity() const;

  ExactPoly squarefree_;
  std::vector<ExactPoly> chain_;
};

std::vector<ExactPoly> sturm_chain(const ExactPoly& p);
int count_roots(const ExactPoly& p, const Rational& lo, const Rational& hi);
std::vector<IsolatingInterval> isolate_positive_roots(const ExactPoly& p);
IsolatingInterval refine_root(const ExactPoly& p, const IsolatingInterval& iv,
                              const Rational& tol);

/// Exact sign decomposition of (0, inf). boundaries are the distinct
/// positive roots (ascending, disjoint enclosures); signs[i] is the sign
/// of p on the open interval between boundary i-1 and boundary i (with
/// signs.front() on (0, first root) and signs.back() on (last root, inf)).
struct SignProfile {
  std::vector<IsolatingInterval> boundaries;
  std::vector<int> signs;

  bool positive_everywhere() const;  // p > 0 on (0,inf) except isolated zeros
  bool negative_everywhere() const;
  bool mixed() const;

  /// Maximal runs where p < 0, as (left, right) boundary enclosures.
  /// The left end of the first run may be the exact point 0.
  std::vector<std::pair<IsolatingInterval, IsolatingInterval>> negative_pieces() const;
};

SignProfile sign_profile_on_positive_axis(const ExactPoly& p);

/// Certified enclosure of sqrt(x) for x >= 0 with width <= 1/2^bits.
std::pair<Rational, Rational> sqrt_enclosure(const Rational& x, unsigned bits);

}  // namespace treenergy
