#pragma once

#include <vector>

#include "acta/monoid.hpp"
#include "acta/partition.hpp"

namespace acta {

  // Green's relations and R* as partitions of the monoid's elements.
  struct GreenStructure {
    Partition R;
    Partition L;
    Partition H;
    Partition D;
    Partition J;
    Partition R_star;
  };

  // R from aS = bS, L from Sa = Sb, J from SaS = SbS, H = R meet L,
  // D = R o L, R* from the kernels x -> xa.
  [[nodiscard]] GreenStructure green(FiniteMonoid const& M);

  // True iff for all x, y: xa = ya <=> xb = yb.
  [[nodiscard]] bool r_star_related(FiniteMonoid const& M, Element a,
                                    Element b);

  struct Flag {
    bool                 value = true;
    std::vector<Element> witness;  // only for a false verdict
  };

  struct StructurePredicates {
    Flag is_group;
    Flag is_commutative;
    Flag is_regular;
    Flag is_inverse;
    Flag is_group_bound;
    Flag is_local;
    Flag is_left_cancellative;
    Flag is_right_cancellative;
    std::vector<Element> group_of_units;  // H_1
    std::vector<Element> idempotents;     // E
  };

  [[nodiscard]] StructurePredicates structure_predicates(FiniteMonoid const& M);
  [[nodiscard]] StructurePredicates structure_predicates(FiniteMonoid const&   M,
                                                         GreenStructure const& G);

  // True iff the H-class containing h is a subgroup (H^2 meets H).
  [[nodiscard]] bool h_class_is_group(FiniteMonoid const&   M,
                                      GreenStructure const& G, Element h);

  // Smallest k >= 1 with a^k in a subgroup H-class; the trajectory
  // a, a^2, ... is followed until its first repeat.
  [[nodiscard]] std::size_t group_bound_exponent(FiniteMonoid const&   M,
                                                 GreenStructure const& G,
                                                 Element               a);

}  // namespace acta
