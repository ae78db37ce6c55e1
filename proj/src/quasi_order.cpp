#include "treenergy/quasi_order.hpp"

#include <sstream>

#include "treenergy/char_poly.hpp"
#include "treenergy/energy.hpp"
#include "treenergy/errors.hpp"

namespace treenergy {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::StrictlyLess: return "StrictlyLess";
    case Relation::Equal: return "Equal";
    case Relation::StrictlyGreater: return "StrictlyGreater";
    case Relation::Incomparable: return "Incomparable";
  }
  return "?";
}

QuasiOrderVerdict compare(const ExactPoly& p, const ExactPoly& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("cannot compare zero polynomials");
  if (p.degree() != q.degree())
    throw DegreeMismatch("compared polynomials must have equal degree");
  if (p.leading() != 1 || q.leading() != 1)
    throw NotMonic("compared polynomials must be monic");
  QuasiOrderVerdict v;
  for (int i = 0; i <= p.degree(); ++i) {
    BigInt a = p.coeff(i), b = q.coeff(i);
    if (a < 0 || b < 0) throw NegativeCoefficient("compared coefficients must be nonnegative");
    if (a < b && v.less_witness < 0) v.less_witness = i;
    if (a > b && v.greater_witness < 0) v.greater_witness = i;
  }
  if (v.less_witness >= 0 && v.greater_witness >= 0) {
    v.relation = Relation::Incomparable;
  } else if (v.less_witness >= 0) {
    v.relation = Relation::StrictlyLess;
  } else if (v.greater_witness >= 0) {
    v.relation = Relation::StrictlyGreater;
  } else {
    v.relation = Relation::Equal;
  }
  return v;
}

QuasiOrderVerdict compare_trees(const Forest& g, const Forest& h) {
  if (g.order() != h.order()) throw OrderMismatch("compared forests must have equal order");
  return compare(phi_tilde(g), phi_tilde(h));
}

namespace {

FamilyConclusion conclude(const std::vector<QuasiOrderVerdict>& verdicts, bool double_edge) {
  bool all_equal = true;
  for (const auto& v : verdicts) {
    if (v.relation != Relation::Equal) all_equal = false;
  }
  if (all_equal) return FamilyConclusion::EqualForAll;
  if (!double_edge) return FamilyConclusion::StrictlyDominated;
  bool row0 = verdicts[0].relation == Relation::StrictlyLess ||
              verdicts[1].relation == Relation::StrictlyLess;
  bool row1 = verdicts[2].relation == Relation::StrictlyLess ||
              verdicts[3].relation == Relation::StrictlyLess;
  return (row0 && row1) ? FamilyConclusion::StrictlyDominated
                        : FamilyConclusion::WeaklyDominated;
}

std::optional<FamilyDominanceCertificate> certify(std::vector<ExactPoly> g_base,
                                                  std::vector<ExactPoly> h_base,
                                                  bool double_edge) {
  FamilyDominanceCertificate cert;
  cert.double_edge = double_edge;
  for (size_t i = 0; i < g_base.size(); ++i) {
    QuasiOrderVerdict v = compare(g_base[i], h_base[i]);
    if (!v.dominated()) return std::nullopt;
    cert.base_verdicts.push_back(v);
  }
  cert.g_base = std::move(g_base);
  cert.h_base = std::move(h_base);
  cert.conclusion = conclude(cert.base_verdicts, double_edge);
  return cert;
}

}  // namespace

std::optional<FamilyDominanceCertificate> family_compare_single(const Forest& g, CutEdge eg,
                                                                const Forest& h, CutEdge eh) {
  if (g.order() != h.order()) throw OrderMismatch("family bases must have equal order");
  std::vector<ExactPoly> gb{phi_tilde(g), phi_tilde(subdivide(g, eg, 1))};
  std::vector<ExactPoly> hb{phi_tilde(h), phi_tilde(subdivide(h, eh, 1))};
  return certify(std::move(gb), std::move(hb), false);
}

std::optional<FamilyDominanceCertificate> family_compare_double(const Forest& g, CutEdge e1,
                                                                CutEdge e2, const Forest& h,
                                                                CutEdge f1, CutEdge f2) {
  if (g.order() != h.order()) throw OrderMismatch("family bases must have equal order");
  auto g_at = [&](int l, int k) {
    return phi_tilde(subdivide(subdivide(g, e1, l), e2, k));
  };
  auto h_at = [&](int l, int k) {
    return phi_tilde(subdivide(subdivide(h, f1, l), f2, k));
  };
  std::vector<ExactPoly> gb{g_at(0, 0), g_at(0, 1), g_at(1, 0), g_at(1, 1)};
  std::vector<ExactPoly> hb{h_at(0, 0), h_at(0, 1), h_at(1, 0), h_at(1, 1)};
  return certify(std::move(gb), std::move(hb), true);
}

bool FamilyDominanceCertificate::replay() const {
  if (g_base.size() != h_base.size() || g_base.size() != base_verdicts.size()) return false;
  if (g_base.size() != (double_edge ? 4u : 2u)) return false;
  std::vector<QuasiOrderVerdict> fresh;
  for (size_t i = 0; i < g_base.size(); ++i) {
    QuasiOrderVerdict v = compare(g_base[i], h_base[i]);
    if (!v.dominated()) return false;
    if (v.relation != base_verdicts[i].relation) return false;
    if (v.less_witness != base_verdicts[i].less_witness) return false;
    fresh.push_back(v);
  }
  return conclude(fresh, double_edge) == conclusion;
}

std::string FamilyDominanceCertificate::to_text() const {
  static const char* kSingle[] = {"k=0", "k=1"};
  static const char* kDouble[] = {"(l,k)=(0,0)", "(l,k)=(0,1)", "(l,k)=(1,0)", "(l,k)=(1,1)"};
  std::ostringstream os;
  os << "family-dominance certificate (" << (double_edge ? "double" : "single")
     << " subdivision edge)\n";
  for (size_t i = 0; i < base_verdicts.size(); ++i) {
    os << "  base " << (double_edge ? kDouble[i] : kSingle[i]) << ": "
       << relation_name(base_verdicts[i].relation);
    if (base_verdicts[i].relation == Relation::StrictlyLess)
      os << " (strict at x^" << base_verdicts[i].less_witness << ")";
    os << "\n    G: " << g_base[i].to_string() << "\n    H: " << h_base[i].to_string() << "\n";
  }
  os << "  conclusion: ";
  switch (conclusion) {
    case FamilyConclusion::EqualForAll:
      os << "G ~ H for every subdivision count";
      break;
    case FamilyConclusion::WeaklyDominated:
      os << "G <= H for every subdivision count";
      break;
    case FamilyConclusion::StrictlyDominated:
      os << "G <= H for every subdivision count, strict from the second subdivision on";
      break;
  }
  os << "\n";
  return os.str();
}

bool quasiorder_implies_energy(const QuasiOrderVerdict& verdict, const EnergyValue& eg,
                               const EnergyValue& eh) {
  switch (verdict.relation) {
    case Relation::StrictlyLess:
      return !(eg.lower() > eh.upper());
    case Relation::StrictlyGreater:
      return !(eh.lower() > eg.upper());
    case Relation::Equal: {
      double gap = eg.midpoint - eh.midpoint;
      if (gap < 0) gap = -gap;
      return gap <= eg.radius + eh.radius;
    }
    case Relation::Incomparable:
      return true;
  }
  return true;
}

}  // namespace treenergy
