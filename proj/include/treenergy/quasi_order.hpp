#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treenergy/exact_poly.hpp"
#include "treenergy/forest.hpp"

namespace treenergy {

enum class Relation { StrictlyLess, Equal, StrictlyGreater, Incomparable };

const char* relation_name(Relation r);

/// Coefficient-wise comparison verdict with replayable witnesses:
/// witness indices are powers of x at which the strict inequality holds.
struct QuasiOrderVerdict {
  Relation relation = Relation::Equal;
  int less_witness = -1;     // power where p's coefficient is strictly smaller
  int greater_witness = -1;  // power where p's coefficient is strictly larger

  bool dominated() const {
    return relation == Relation::StrictlyLess || relation == Relation::Equal;
  }
};

/// Compares p against q coefficient-wise. Both must be monic of the same
/// degree with nonnegative coefficients. Throws DegreeMismatch, NotMonic
/// or NegativeCoefficient.
QuasiOrderVerdict compare(const ExactPoly& p, const ExactPoly& q);

/// compare on the phitilde polynomials of two equal-order forests.
QuasiOrderVerdict compare_trees(const Forest& g, const Forest& h);

enum class FamilyConclusion { EqualForAll, WeaklyDominated, StrictlyDominated };

/// Certificate that G(k) <= H(k) for every subdivision count (one edge
/// per graph), or G(l,k) <= H(l,k) for all l,k (two edges per graph).
/// Stores the base polynomials so the conclusion can be replayed.
struct FamilyDominanceCertificate {
  bool double_edge = false;
  // single: index 0 -> k=0, 1 -> k=1
  // double: index 0 -> (0,0), 1 -> (0,1), 2 -> (1,0), 3 -> (1,1)
  std::vector<ExactPoly> g_base;
  std::vector<ExactPoly> h_base;
  std::vector<QuasiOrderVerdict> base_verdicts;
  FamilyConclusion conclusion = FamilyConclusion::EqualForAll;

  /// Re-derives base verdicts and the conclusion from the stored
  /// polynomials; false if anything disagrees.
  bool replay() const;
  std::string to_text() const;
};

/// Applies the single-edge family rule: if G(0) <= H(0) and G(1) <= H(1)
/// then G(k) <= H(k) for all k, with equivalence for k >= 2 exactly when
/// both base relations are equalities. Returns nullopt when a base pair
/// is incomparable or reversed. Throws OrderMismatch.
std::optional<FamilyDominanceCertificate> family_compare_single(const Forest& g, CutEdge eg,
                                                                const Forest& h, CutEdge eh);

/// Two-edge analogue over the four base pairs (0,0),(0,1),(1,0),(1,1);
/// strict for l >= 2 or k >= 2 when each of the rows {(0,0),(0,1)} and
/// {(1,0),(1,1)} contains a strict relation.
std::optional<FamilyDominanceCertificate> family_compare_double(const Forest& g, CutEdge e1,
                                                                CutEdge e2, const Forest& h,
                                                                CutEdge f1, CutEdge f2);

struct EnergyValue;  // energy.hpp

/// Sanity gate: a decisive quasi-order verdict must be consistent with
/// the certified energies (an Incomparable verdict claims nothing).
bool quasiorder_implies_energy(const QuasiOrderVerdict& verdict, const EnergyValue& eg,
                               const EnergyValue& eh);

}  // namespace treenergy
