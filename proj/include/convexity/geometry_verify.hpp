#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "convexity/closed_set_lattice.hpp"
#include "convexity/closure.hpp"
#include "convexity/lattice.hpp"
#include "convexity/verdict.hpp"

namespace convexity {

/// close(∅) = ∅.
Verdict check_zero_closed(const ClosureSystem& system);

/// For closed A and distinct x, y outside A: x ∈ close(A+y) implies
/// y ∉ close(A+x). Witness (A, x, y) is the first failure in canonical order.
Verdict check_anti_exchange(const ClosureSystem& system);

/// Zero-closed and anti-exchange.
Verdict is_convex_geometry(const ClosureSystem& system);

/// Every Hasse cover adds exactly one element x, and close({x}) is
/// join-irreducible.
Verdict check_cover_structure(const ClosedSetLattice& lattice);

struct SpatialReduction {
  /// Elements y with close({y}) join-irreducible (original ids).
  ElementSet support;
  /// Restriction of the system to the support.
  ClosureSystem reduced;
  /// Closed set A of the original paired with A ∩ support in reduced ids,
  /// in canonical order of the original.
  std::vector<std::pair<ElementSet, ElementSet>> correspondence;
};

/// Restricts a convex geometry to the elements whose singleton closures are
/// join-irreducible and checks that A -> A ∩ Y is a bijection of closed sets.
SpatialReduction spatial_support_reduction(const ClosureSystem& system);

/// Every element is a join of join-irreducibles, and for every y and
/// join-irreducibles u, v: y < y∨u = y∨v implies u = v.
Verdict check_convexity_characterization(const Lattice& lattice);

/// System on the join-irreducibles with close(Y) = {p : p <= ⋁Y}.
ClosureSystem convex_geometry_from_lattice(const Lattice& lattice);

/// For closed A, B with A ⊄ B, removing the ordering-least element of A∖B
/// from A leaves a closed set. `ordering` lists ground ids from least to greatest.
Verdict check_super_solvable(const ClosureSystem& system, std::span<const ElementId> ordering);

/// Lexicographically least ordering passing check_super_solvable, if any.
/// Ground sets above 10 elements raise CapacityError.
std::optional<std::vector<ElementId>> find_super_solvable_order(const ClosureSystem& system);

Verdict is_distributive(const Lattice& lattice);
Verdict is_modular(const Lattice& lattice);

/// System on the meet-irreducibles M (top excluded) with
/// close(Y) = {m ∈ M : m >= ⋀Y}. Its closed-set lattice is dual to the input.
ClosureSystem antimatroid_from_distributive(const Lattice& lattice);

}  // namespace convexity
