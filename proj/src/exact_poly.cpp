#include "treenergy/exact_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "treenergy/errors.hpp"

namespace treenergy {

Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

ExactPoly::ExactPoly(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

void ExactPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactPoly ExactPoly::constant(BigInt c) {
  std::vector<BigInt> v;
  if (c != 0) v.push_back(std::move(c));
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::monomial(BigInt c, int power) {
  if (c == 0) return {};
  std::vector<BigInt> v(power + 1, BigInt(0));
  v[power] = std::move(c);
  return ExactPoly(std::move(v));
}

BigInt ExactPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

const BigInt& ExactPoly::leading() const {
  if (is_zero()) throw ZeroPolynomial("leading coefficient of zero polynomial");
  return coeffs_.back();
}

ExactPoly ExactPoly::operator-() const {
  std::vector<BigInt> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator*(const BigInt& c) const {
  if (c == 0) return {};
  std::vector<BigInt> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(coeffs_.size() + k, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * BigInt(static_cast<long>(i));
  return ExactPoly(std::move(v));
}

Rational ExactPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + Rational(coeffs_[i]);
  }
  return acc;
}

BigInt ExactPoly::eval_int(const BigInt& x) const {
  BigInt acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

int ExactPoly::sign_at(const Rational& x) const {
  Rational v = eval(x);
  return sgn(v);
}

BigInt ExactPoly::content() const {
  BigInt g(0);
  for (const BigInt& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ExactPoly ExactPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  std::vector<BigInt> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::divide_exact(const ExactPoly& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw Error("inexact polynomial division");
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(coeffs_.size() - divisor.coeffs_.size() + 1, BigInt(0));
  const BigInt& lead = divisor.leading();
  for (int i = static_cast<int>(rem.size()) - 1; i >= divisor.degree(); --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
      throw Error("inexact polynomial division");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    quot[i - divisor.degree()] = q;
    for (int j = 0; j <= divisor.degree(); ++j) {
      rem[i - divisor.degree() + j] -= q * divisor.coeffs_[j];
    }
  }
  for (const BigInt& c : rem) {
    if (c != 0) throw Error("inexact polynomial division");
  }
  return ExactPoly(std::move(quot));
}

namespace {

// Remainder over the rationals, scaled back to a primitive integer
// polynomial with the same sign (the positive scale keeps Sturm sign
// sequences intact).
ExactPoly primitive_rational_rem(const ExactPoly& a, const ExactPoly& b) {
  std::vector<Rational> rem(a.coeffs().size());
  for (size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(a.coeffs()[i]);
  int db = b.degree();
  Rational lead(b.leading());
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / lead;
    rem[i] = 0;
    for (int j = 0; j < db; ++j) {
      rem[i - db + j] -= q * Rational(b.coeffs()[j]);
    }
  }
  // clear denominators
  BigInt den(1);
  for (int j = 0; j < db; ++j) {
    BigInt d = rem[j].get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> out(db, BigInt(0));
  for (int j = 0; j < db; ++j) {
    Rational scaled = rem[j] * Rational(den);
    out[j] = scaled.get_num();
  }
  return ExactPoly(std::move(out)).primitive_part();
}

}  // namespace

ExactPoly ExactPoly::gcd(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly u = a.primitive_part();
  ExactPoly v = b.primitive_part();
  while (!v.is_zero()) {
    ExactPoly r = primitive_rational_rem(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  if (!u.is_zero() && u.leading() < 0) u = -u;
  return u;
}

ExactPoly ExactPoly::square_free_part() const {
  if (is_zero()) throw ZeroPolynomial("square-free part of zero polynomial");
  if (degree() == 0) return constant(1);
  ExactPoly p = primitive_part();
  ExactPoly g = gcd(p, p.derivative());
  ExactPoly s = p.divide_exact(g);
  if (s.leading() < 0) s = -s;
  return s.primitive_part();
}

std::vector<std::pair<ExactPoly, int>> ExactPoly::square_free_decomposition() const {
  if (is_zero()) throw ZeroPolynomial("square-free decomposition of zero polynomial");
  std::vector<std::pair<ExactPoly, int>> out;
  ExactPoly p = primitive_part();
  if (p.leading() < 0) p = -p;
  if (p.degree() == 0) return out;
  // Yun's algorithm.
  ExactPoly dp = p.derivative();
  ExactPoly g = gcd(p, dp);
  ExactPoly w = p.divide_exact(g);
  ExactPoly y = dp.divide_exact(g);
  ExactPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    ExactPoly f = gcd(w, z);
    if (f.degree() > 0) out.emplace_back(f, i);
    w = w.divide_exact(f);
    y = z.divide_exact(f);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

BigInt ExactPoly::root_bound() const {
  if (is_zero()) throw ZeroPolynomial("root bound of zero polynomial");
  BigInt maxc(0);
  for (const BigInt& c : coeffs_) {
    BigInt a = abs(c);
    if (a > maxc) maxc = a;
  }
  BigInt lead = abs(leading());
  // 1 + max|a_i| / |a_n|, rounded up
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

std::string ExactPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (c > 0 && !first) os << "+";
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << c.get_str();
      os << "x";
      if (i != 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

ExactPoly ExactPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error("empty polynomial text");
  std::vector<BigInt> coeffs;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    if (pos >= s.size()) throw Error("dangling sign in polynomial text: " + text);
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits.push_back(s[pos]);
      ++pos;
    }
    BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
    int power = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string pd;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          pd.push_back(s[pos]);
          ++pos;
        }
        if (pd.empty()) throw Error("missing exponent in polynomial text: " + text);
        power = std::stoi(pd);
      }
    } else if (digits.empty()) {
      throw Error("bad term in polynomial text: " + text);
    }
    if (static_cast<size_t>(power) >= coeffs.size()) coeffs.resize(power + 1, BigInt(0));
    coeffs[power] += sign * c;
  }
  return ExactPoly(std::move(coeffs));
}

}  // namespace treenergy
