// Builds a few rings, prints their ideal lattices and the logic-algebra
// classification, and glues two algebras with the ordinal product.

#include <iostream>

#include "residua/residua.hpp"

using namespace residua;

static void describe(const RingSpec& spec) {
  FiniteRing R = build_ring(spec);
  IdealLattice IL = build_ideal_lattice(R);
  RingLogicReport logic = classify_ring_logic(R);
  std::cout << ring_short_name(spec) << ": " << IL.ideals.size()
            << " ideals:";
  for (int i = 0; i < IL.algebra.size(); ++i)
    std::cout << " " << IL.algebra.lat.label(i);
  std::cout << "\n  multiplication=" << logic.multiplication
            << " divisible=" << logic.divisible << " mtl=" << logic.mtl
            << " bl=" << logic.bl << " mv=" << logic.mv
            << " chain=" << logic.chain << "\n";
}

int main() {
  describe(RingSpec::Zn(8));
  describe(RingSpec::Zn(12));
  describe(RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(2)}));
  describe(z2xy_spec());

  auto boolean4 =
      build_ideal_lattice(
          build_ring(RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(2)})))
          .algebra;
  auto two = build_ideal_lattice(build_ring(RingSpec::Zn(2))).algebra;
  auto glued = ordinal_product(boolean4, two);
  auto props = check_properties(glued);
  std::cout << "ordinal product of Id(Z2xZ2) and Id(Z2): size "
            << glued.size() << ", divisible=" << props.is_divisible
            << ", bl=" << props.is_bl << "\n";

  auto counts = table_reports(6);
  std::cout << "\n" << counts.text;
  return 0;
}
