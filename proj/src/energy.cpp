#include "treenergy/energy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "treenergy/char_poly.hpp"
#include "treenergy/errors.hpp"
#include "treenergy/quadrature.hpp"

namespace treenergy {

namespace {

constexpr double kPi = 3.14159265358979323846;

double round_up(double x) {
  if (x == 0) return 0;
  return std::nextafter(std::nextafter(x, std::numeric_limits<double>::infinity()),
                        std::numeric_limits<double>::infinity());
}

EnergyValue to_energy_value(const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  double m = mid.get_d();
  Rational md(m);
  Rational rad = hi - md > md - lo ? hi - md : md - lo;
  if (rad < 0) rad = 0;
  return {m, round_up(rad.get_d())};
}

// D(x)/q(x) in double precision, switching to reversed coefficients for
// x > 1 so no intermediate overflows for large x.
class StableRatio {
 public:
  StableRatio(const ExactPoly& num, const ExactPoly& den)
      : dn_(num.degree()), dd_(den.degree()) {
    for (int i = 0; i <= dn_; ++i) num_asc_.push_back(num.coeff(i).get_d());
    for (int i = 0; i <= dd_; ++i) den_asc_.push_back(den.coeff(i).get_d());
    for (int i = dn_; i >= 0; --i) num_rev_.push_back(num.coeff(i).get_d());
    for (int i = dd_; i >= 0; --i) den_rev_.push_back(den.coeff(i).get_d());
  }

  double operator()(double x) const {
    if (x <= 1.0) return horner(num_asc_, x) / horner(den_asc_, x);
    double u = 1.0 / x;
    return horner(num_rev_, u) / horner(den_rev_, u) * std::pow(u, dd_ - dn_);
  }

 private:
  static double horner(const std::vector<double>& c, double x) {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }
  // ascending arrays are indexed by power; reversed arrays by power of 1/x
  int dn_, dd_;
  std::vector<double> num_asc_, den_asc_;
  std::vector<double> num_rev_, den_rev_;
};

void validate_phitilde_pair(const ExactPoly& p1, const ExactPoly& p2) {
  if (p1.is_zero() || p2.is_zero()) throw ZeroPolynomial("energy integrand needs nonzero input");
  if (p1.degree() != p2.degree()) throw DegreeMismatch("energy integrand needs equal degrees");
  if (p1.leading() != 1 || p2.leading() != 1) throw NotMonic("energy integrand needs monic input");
  for (int i = 0; i < p1.degree(); ++i) {
    if (p1.coeff(i) < 0 || p2.coeff(i) < 0)
      throw NegativeCoefficient("energy integrand needs nonnegative coefficients");
  }
}

}  // namespace

RationalInterval energy_interval(const Forest& f, const Rational& tol) {
  if (tol <= 0) throw InvalidSpec("tolerance must be positive");
  ExactPoly p = squared_eigenvalue_poly(f);
  Rational elo(0), ehi(0);
  if (p.degree() <= 0) return {elo, ehi};

  struct RootJob {
    RootIsolator iso;
    IsolatingInterval iv;
    int mult;
  };
  std::vector<RootJob> jobs;
  long weighted = 0;
  for (const auto& [factor, mult] : p.square_free_decomposition()) {
    RootIsolator iso(factor);
    for (const IsolatingInterval& iv : iso.isolate_positive_roots()) {
      jobs.push_back({iso, iv, mult});
      weighted += mult;
    }
  }
  if (jobs.empty()) return {elo, ehi};

  // lambda_j enclosures of width <= tol / (2 * sum of multiplicities)
  // make the energy enclosure width <= tol
  Rational target = tol / (2 * weighted);
  unsigned bits = 16;
  {
    Rational granularity = make_rational(1, BigInt(1) << bits);
    while (granularity * 4 > target) {
      bits += 16;
      granularity = make_rational(1, BigInt(1) << bits);
    }
  }
  for (RootJob& job : jobs) {
    IsolatingInterval iv = job.iv;
    while (true) {
      Rational llo = sqrt_enclosure(iv.lo, bits).first;
      Rational lhi = sqrt_enclosure(iv.hi, bits).second;
      if (lhi - llo <= target) {
        elo += 2 * job.mult * llo;
        ehi += 2 * job.mult * lhi;
        break;
      }
      iv = job.iso.refine(iv, iv.width() / 2);
    }
  }
  return {elo, ehi};
}

EnergyValue energy(const Forest& f, double tol) {
  RationalInterval e = energy_interval(f, Rational(tol));
  return to_energy_value(e.lo, e.hi);
}

EnergyValue energy_diff_coulson(const ExactPoly& p1, const ExactPoly& p2, double tol) {
  validate_phitilde_pair(p1, p2);
  ExactPoly diff = p1 - p2;
  if (diff.is_zero()) return {0.0, 0.0};

  StableRatio ratio(diff, p2);
  // x = t/(1-t) maps (0,1) onto (0,inf); the integrand stays bounded
  // because ln(p1/p2) decays like 1/x^2.
  auto integrand = [&](double t) {
    double inv = 1.0 / (1.0 - t);
    double x = t * inv;
    return std::log1p(ratio(x)) * inv * inv;
  };
  QuadratureOptions opts;
  opts.abs_tol = tol * (kPi / 2) * 0.9;
  QuadratureResult qr = integrate_adaptive(integrand, 0.0, 1.0, opts);
  double value = qr.value * 2 / kPi;
  double radius = qr.error_estimate * 2 / kPi + 1e-12 + 1e-12 * std::fabs(value);
  return {value, radius};
}

Rational d_sequence_at(const ExactPoly& g0, const ExactPoly& g1, const ExactPoly& h0,
                       const ExactPoly& h1, int k, const Rational& x) {
  if (k < 0) throw InvalidSpec("subdivision index must be nonnegative");
  Rational ga = g0.eval(x), gb = g1.eval(x);
  Rational ha = h0.eval(x), hb = h1.eval(x);
  if (k == 0) return ha / ga;
  for (int i = 2; i <= k; ++i) {
    Rational gn = x * gb + ga;
    Rational hn = x * hb + ha;
    ga = gb;
    gb = gn;
    ha = hb;
    hb = hn;
  }
  return hb / gb;
}

const char* dominance_mode_name(DominanceMode m) {
  switch (m) {
    case DominanceMode::Thm31Case1: return "Thm31Case1";
    case DominanceMode::Thm31Case2: return "Thm31Case2";
    case DominanceMode::Thm32Bound: return "Thm32Bound";
    case DominanceMode::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool DominanceResult::certifies_positive_gap() const {
  if (mode == DominanceMode::Inconclusive) return false;
  if (gap_lower_bound.lower() > 0) return true;
  return strict && gap_lower_bound.lower() >= 0;
}

std::string DominanceResult::to_text() const {
  std::ostringstream os;
  os << "dominance result: mode=" << dominance_mode_name(mode) << " range=" << range
     << (strict ? " (strict away from base)" : "") << "\n";
  os << "  w = " << w.to_string() << "\n";
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.9f +/- %.3g", base_gap.midpoint, base_gap.radius);
  os << "  base gap (k=" << base_index << "): " << buf << "\n";
  if (!D.empty()) {
    os << "  D =";
    for (const auto& [l, r] : D) {
      std::snprintf(buf, sizeof(buf), " (%.9g, %.9g)", l.midpoint().get_d(),
                    r.midpoint().get_d());
      os << buf;
    }
    os << "\n";
    std::snprintf(buf, sizeof(buf), "%.9f", integral_correction);
    os << "  correction (2/pi) int_D ln(d1/d0) = " << buf << "\n";
  }
  std::snprintf(buf, sizeof(buf), "%.9f +/- %.3g", gap_lower_bound.midpoint,
                gap_lower_bound.radius);
  os << "  gap lower bound: " << buf << "\n";
  return os.str();
}

DominanceResult classify_dominance(const Forest& g, CutEdge eg, const Forest& h, CutEdge eh,
                                   double tol) {
  if (g.order() != h.order()) throw OrderMismatch("dominance bases must have equal order");
  ExactPoly g0 = phi_tilde(g);
  ExactPoly g1 = phi_tilde(subdivide(g, eg, 1));
  ExactPoly h0 = phi_tilde(h);
  ExactPoly h1 = phi_tilde(subdivide(h, eh, 1));

  DominanceResult r;
  r.w = h1 * g0 - h0 * g1;

  auto gap_at = [&](int base) {
    EnergyValue egv = energy(base == 0 ? g : subdivide(g, eg, 1), tol / 4);
    EnergyValue ehv = energy(base == 0 ? h : subdivide(h, eh, 1), tol / 4);
    return EnergyValue{ehv.midpoint - egv.midpoint, ehv.radius + egv.radius};
  };

  if (r.w.is_zero()) {
    // d1 == d0 identically, so the gap is the same for every k.
    r.mode = DominanceMode::Thm31Case1;
    r.base_index = 0;
    r.base_gap = gap_at(0);
    r.gap_lower_bound = r.base_gap;
    r.strict = false;
    r.range = "k>=0";
    return r;
  }

  r.w_profile = sign_profile_on_positive_axis(r.w);
  if (r.w_profile.positive_everywhere()) {
    r.mode = DominanceMode::Thm31Case1;
    r.base_index = 0;
    r.base_gap = gap_at(0);
    r.gap_lower_bound = r.base_gap;
    r.strict = true;
    r.range = "k>=0";
    return r;
  }
  if (r.w_profile.negative_everywhere()) {
    r.mode = DominanceMode::Thm31Case2;
    r.base_index = 1;
    r.base_gap = gap_at(1);
    r.gap_lower_bound = r.base_gap;
    r.strict = true;
    r.range = "k!=1";
    return r;
  }

  // Mixed sign: integrate ln(d1/d0) over D = {w < 0}.
  r.base_index = 0;
  r.base_gap = gap_at(0);
  r.D = r.w_profile.negative_pieces();
  StableRatio ratio(r.w, h0 * g1);
  auto integrand = [&](double x) { return std::log1p(ratio(x)); };

  double correction = 0, corr_err = 0;
  QuadratureOptions opts;
  opts.abs_tol = tol / 4 * (kPi / 2);
  for (const auto& [left, right] : r.D) {
    double a = left.midpoint().get_d();
    double b = right.midpoint().get_d();
    QuadratureResult qr = integrate_adaptive(integrand, a, b, opts);
    correction += qr.value;
    // endpoint enclosures: integrand vanishes at the true endpoints, so
    // the misplaced sliver contributes at most width * local magnitude
    double local = std::max(std::fabs(integrand(a)), std::fabs(integrand(b)));
    corr_err += qr.error_estimate +
                (left.width().get_d() + right.width().get_d()) * (local + 1.0);
  }
  r.integral_correction = correction * 2 / kPi;
  r.gap_lower_bound = {r.base_gap.midpoint + r.integral_correction,
                       r.base_gap.radius + corr_err * 2 / kPi + 1e-12};
  r.strict = false;
  r.range = "k>=0";
  r.mode = r.gap_lower_bound.lower() > 0 ? DominanceMode::Thm32Bound
                                         : DominanceMode::Inconclusive;
  return r;
}

}  // namespace treenergy
