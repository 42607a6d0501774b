#pragma once

#include <cstddef>
#include <vector>

#include "acta/monoid.hpp"

namespace acta::catalog {

  [[nodiscard]] FiniteMonoid trivial();
  // Z_n with identity 0 and element k acting as k (mod n).
  [[nodiscard]] FiniteMonoid cyclic_group(std::size_t n);
  // {1, e} with e e = e.
  [[nodiscard]] FiniteMonoid u1();
  // {1, a_1, ..., a_k} with xy = y for x, y among the a_i.
  [[nodiscard]] FiniteMonoid right_zero_with_identity(std::size_t k);
  // {1, a_1, ..., a_k} with xy = x for x, y among the a_i.
  [[nodiscard]] FiniteMonoid left_zero_with_identity(std::size_t k);
  // All maps {0..n-1} -> {0..n-1}, composed left to right.
  [[nodiscard]] FiniteMonoid full_transformation_monoid(std::size_t n);

  // The monoid whose element perm[a] plays the role of a in M.
  [[nodiscard]] FiniteMonoid relabel(FiniteMonoid const&         M,
                                     std::vector<Element> const& perm);

  // Least table (lexicographically) over relabellings sending the identity
  // to 0; equal for isomorphic monoids.
  [[nodiscard]] Table canonical_table(FiniteMonoid const& M);

  // One representative per isomorphism class of monoids of the given order,
  // identity 0, in canonical form. Throws order_exceeds_cap above 4.
  [[nodiscard]] std::vector<FiniteMonoid> monoids_of_order(std::size_t order);

  // All monoids of order 1..max_order.
  [[nodiscard]] std::vector<FiniteMonoid> monoids_up_to(std::size_t max_order);

}  // namespace acta::catalog
