#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace treenergy {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational from numerator/denominator (gmpxx does not
/// canonicalize the two-argument constructor itself).
Rational make_rational(const BigInt& num, const BigInt& den);

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. coeff(i) is the coefficient of x^i. All arithmetic is
/// exact; the zero polynomial has degree -1.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<BigInt> ascending_coeffs);

  static ExactPoly constant(BigInt c);
  static ExactPoly monomial(BigInt c, int power);
  static ExactPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int i) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  ExactPoly operator-() const;
  ExactPoly operator+(const ExactPoly& o) const;
  ExactPoly operator-(const ExactPoly& o) const;
  ExactPoly operator*(const ExactPoly& o) const;
  ExactPoly operator*(const BigInt& c) const;
  bool operator==(const ExactPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const ExactPoly& o) const { return !(*this == o); }

  /// Multiplies by x^k.
  ExactPoly shifted(int k) const;

  ExactPoly derivative() const;

  Rational eval(const Rational& x) const;
  BigInt eval_int(const BigInt& x) const;
  int sign_at(const Rational& x) const;

  /// gcd of the coefficients (positive; 0 for the zero polynomial).
  BigInt content() const;
  /// Divides out the content, keeping the leading sign.
  ExactPoly primitive_part() const;

  /// Exact quotient; throws Error if the division leaves a remainder.
  ExactPoly divide_exact(const ExactPoly& divisor) const;

  /// Primitive gcd with positive leading coefficient.
  static ExactPoly gcd(const ExactPoly& a, const ExactPoly& b);

  /// p / gcd(p, p'), primitive, positive leading coefficient.
  ExactPoly square_free_part() const;

  /// Yun decomposition of the primitive part: returns (q_i, i) with
  /// q_i square-free, pairwise coprime, and p ~ prod q_i^i up to a
  /// constant factor. Factors with q_i == 1 are omitted.
  std::vector<std::pair<ExactPoly, int>> square_free_decomposition() const;

  /// Integer B with every real root of p in (-B, B).
  BigInt root_bound() const;

  /// Text form in descending powers, e.g. "x^10+9x^8+27x^6+31x^4+12x^2+1".
  std::string to_string() const;
  static ExactPoly parse(const std::string& text);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;  // ascending powers; empty == zero
};

inline ExactPoly operator*(const BigInt& c, const ExactPoly& p) { return p * c; }

}  // namespace treenergy
