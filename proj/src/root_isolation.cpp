#include "treenergy/root_isolation.hpp"

#include <algorithm>

#include "treenergy/errors.hpp"

namespace treenergy {

namespace {

// Remainder of a by b over the rationals, rescaled by a positive factor
// to a primitive integer polynomial. The positive scale is what keeps
// Sturm sign sequences valid.
ExactPoly signed_primitive_rem(const ExactPoly& a, const ExactPoly& b) {
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
  BigInt den(1);
  for (int j = 0; j < db; ++j) {
    BigInt d = rem[j].get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> out(std::max(db, 0), BigInt(0));
  for (int j = 0; j < db; ++j) {
    Rational scaled = rem[j] * Rational(den);
    out[j] = scaled.get_num();
  }
  return ExactPoly(std::move(out)).primitive_part();
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

RootIsolator::RootIsolator(const ExactPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("root isolation of zero polynomial");
  squarefree_ = p.square_free_part();
  chain_.push_back(squarefree_);
  if (squarefree_.degree() >= 1) {
    chain_.push_back(squarefree_.derivative().primitive_part());
    while (chain_.back().degree() >= 1) {
      ExactPoly r = signed_primitive_rem(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;  // square-free input: remainder chain ends at a constant
      chain_.push_back(-r);
    }
  }
}

int RootIsolator::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const ExactPoly& q : chain_) signs.push_back(q.sign_at(x));
  return variations(signs);
}

int RootIsolator::variations_at_pos_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const ExactPoly& q : chain_) signs.push_back(sgn(q.leading()));
  return variations(signs);
}

int RootIsolator::count_roots(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return variations_at(lo) - variations_at(hi);
}

int RootIsolator::count_positive() const {
  return variations_at(Rational(0)) - variations_at_pos_infinity();
}

std::vector<IsolatingInterval> RootIsolator::isolate_positive_roots() const {
  std::vector<IsolatingInterval> out;
  Rational bound(squarefree_.root_bound());
  int total = count_roots(Rational(0), bound);
  if (total == 0) return out;

  // Lifts lo until (lo', hi] still holds exactly `want` roots but lo' is
  // not itself a root. Used where the natural left endpoint is 0 or an
  // exactly-hit root.
  auto lift_lo = [&](const Rational& lo, const Rational& hi, int want) -> Rational {
    Rational step = (hi - lo) / 2;
    while (true) {
      Rational cand = lo + step;
      if (count_roots(cand, hi) == want && squarefree_.sign_at(cand) != 0) return cand;
      step /= 2;
    }
  };

  struct Task {
    Rational lo, hi;
    int count;
  };
  // Explicit stack, processed left-to-right so output is ascending.
  std::vector<Task> stack;
  auto process = [&](auto&& self, const Rational& lo, const Rational& hi, int count) -> void {
    if (count == 0) return;
    if (count == 1) {
      Rational left = lo;
      if (squarefree_.sign_at(left) == 0) left = lift_lo(lo, hi, 1);
      out.push_back({left, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (squarefree_.sign_at(mid) == 0) {
      int below = count_roots(lo, mid) - 1;  // roots strictly below mid
      if (below > 0) {
        // Shrink the right endpoint below mid so the sub-count is exact.
        Rational step = (mid - lo) / 2;
        Rational cap = mid - step;
        while (count_roots(lo, cap) != below) {
          step /= 2;
          cap = mid - step;
        }
        self(self, lo, cap, below);
      }
      out.push_back({mid, mid});
      self(self, mid, hi, count - below - 1);
      return;
    }
    int c1 = count_roots(lo, mid);
    self(self, lo, mid, c1);
    self(self, mid, hi, count - c1);
  };
  process(process, Rational(0), bound, total);
  return out;
}

IsolatingInterval RootIsolator::refine(IsolatingInterval iv, const Rational& tol) const {
  if (iv.is_point()) return iv;
  int slo = squarefree_.sign_at(iv.lo);
  if (slo == 0) {
    // The left endpoint is a root of a neighboring enclosure; the unique
    // root of this interval lies strictly inside, so a first bisection
    // step re-establishes the sign invariant.
    Rational mid = iv.midpoint();
    int sm = squarefree_.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (count_roots(mid, iv.hi) == 1) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
    return refine(iv, tol);
  }
  while (iv.width() > tol) {
    Rational mid = iv.midpoint();
    int sm = squarefree_.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<ExactPoly> sturm_chain(const ExactPoly& p) { return RootIsolator(p).chain(); }

int count_roots(const ExactPoly& p, const Rational& lo, const Rational& hi) {
  return RootIsolator(p).count_roots(lo, hi);
}

std::vector<IsolatingInterval> isolate_positive_roots(const ExactPoly& p) {
  return RootIsolator(p).isolate_positive_roots();
}

IsolatingInterval refine_root(const ExactPoly& p, const IsolatingInterval& iv,
                              const Rational& tol) {
  return RootIsolator(p).refine(iv, tol);
}

bool SignProfile::positive_everywhere() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

bool SignProfile::negative_everywhere() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s < 0; });
}

bool SignProfile::mixed() const { return !positive_everywhere() && !negative_everywhere(); }

std::vector<std::pair<IsolatingInterval, IsolatingInterval>> SignProfile::negative_pieces()
    const {
  std::vector<std::pair<IsolatingInterval, IsolatingInterval>> out;
  const IsolatingInterval origin{Rational(0), Rational(0)};
  size_t i = 0;
  while (i < signs.size()) {
    if (signs[i] >= 0) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < signs.size() && signs[j + 1] < 0) ++j;
    if (j == signs.size() - 1)
      throw Error("unbounded negative sign run on the positive axis");
    out.emplace_back(i == 0 ? origin : boundaries[i - 1], boundaries[j]);
    i = j + 1;
  }
  return out;
}

SignProfile sign_profile_on_positive_axis(const ExactPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("sign profile of zero polynomial");
  RootIsolator iso(p);
  SignProfile profile;
  profile.boundaries = iso.isolate_positive_roots();

  // Tighten enclosures until consecutive ones are separated by a gap, so
  // every piece has room for a sample point.
  const Rational start_tol = make_rational(1, BigInt(1) << 40);
  for (auto& b : profile.boundaries) b = iso.refine(b, start_tol);
  for (size_t i = 0; i + 1 < profile.boundaries.size(); ++i) {
    while (!(profile.boundaries[i].hi < profile.boundaries[i + 1].lo)) {
      profile.boundaries[i] = iso.refine(profile.boundaries[i], profile.boundaries[i].width() / 2);
      profile.boundaries[i + 1] =
          iso.refine(profile.boundaries[i + 1], profile.boundaries[i + 1].width() / 2);
    }
  }

  // One sample per open piece; all roots live inside the enclosures, so
  // samples strictly between enclosures have nonzero sign.
  std::vector<Rational> samples;
  if (profile.boundaries.empty()) {
    samples.push_back(Rational(1));
  } else {
    // Enclosure los are nonzero unless p itself is nonzero at 0, in
    // which case the limit sign at 0 equals the sign on the first piece.
    Rational first = profile.boundaries.front().lo;
    samples.push_back(first > 0 ? Rational(first / 2) : Rational(0));
    for (size_t i = 0; i + 1 < profile.boundaries.size(); ++i) {
      samples.push_back((profile.boundaries[i].hi + profile.boundaries[i + 1].lo) / 2);
    }
    samples.push_back(profile.boundaries.back().hi + 1);
  }
  for (const Rational& x : samples) profile.signs.push_back(p.sign_at(x));
  return profile;
}

std::pair<Rational, Rational> sqrt_enclosure(const Rational& x, unsigned bits) {
  if (x < 0) throw Error("sqrt of negative rational");
  if (x == 0) return {Rational(0), Rational(0)};
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  BigInt scale = BigInt(1) << bits;
  BigInt t = num * den * scale * scale;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  BigInt d = den * scale;
  Rational lo = make_rational(r, d);
  if (r * r == t) return {lo, lo};
  Rational hi = make_rational(r + 1, d);
  return {lo, hi};
}

}  // namespace treenergy
