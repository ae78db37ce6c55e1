#include <cassert>
#include <iostream>

#include "treenergy/char_poly.hpp"
#include "treenergy/energy.hpp"
#include "treenergy/enumerate.hpp"
#include "treenergy/quasi_order.hpp"
#include "treenergy/root_isolation.hpp"
#include "treenergy/tree_spec.hpp"

using namespace treenergy;

int main() {
  // phitilde of P_10(2,6,1) against the expected matching counts
  Forest t = build(TreeSpec::parse("S(10;2,6,1)"));
  ExactPoly pt = phi_tilde(t);
  std::cout << "phitilde S(10;2,6,1) = " << pt.to_string() << "\n";
  assert(pt.to_string() == "x^10+9x^8+27x^6+31x^4+12x^2+1");

  ExactPoly q = ExactPoly::parse("x^2-5");
  auto roots = isolate_positive_roots(q);
  assert(roots.size() == 1);
  auto iv = refine_root(q, roots[0], make_rational(1, BigInt(1000000000000)));
  std::cout << "sqrt5 in [" << iv.lo.get_d() << ", " << iv.hi.get_d() << "]\n";

  EnergyValue e = energy(t, 1e-9);
  std::cout << "E(S(10;2,6,1)) = " << e.midpoint << " +/- " << e.radius << "\n";
  assert(std::abs(e.midpoint - 11.937511) < 1e-5);

  Forest g = build(TreeSpec::parse("T(10;2,2|2,2)"));
  EnergyValue eg = energy(g, 1e-9);
  std::cout << "E(T(10;2,2|2,2)) = " << eg.midpoint << " +/- " << eg.radius << "\n";
  assert(std::abs(eg.midpoint - 11.924777) < 1e-5);

  EnergyValue diff = energy_diff_coulson(phi_tilde(t), phi_tilde(g), 1e-8);
  std::cout << "coulson diff = " << diff.midpoint << " +/- " << diff.radius << "\n";
  assert(std::abs(diff.midpoint - 0.012734) < 5e-5);

  std::cout << "free trees n=7: " << free_tree_count(7) << "\n";
  assert(free_tree_count(7) == 11);
  assert(free_tree_count(10) == 106);

  std::cout << "smoke ok\n";
  return 0;
}
