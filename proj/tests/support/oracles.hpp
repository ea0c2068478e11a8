#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "convexity/element_set.hpp"
#include "convexity/lattice.hpp"
#include "convexity/poset.hpp"
#include "convexity/relconvex.hpp"
#include "convexity/semilattice.hpp"

namespace oracle {

using convexity::ElementSet;

using Family = std::vector<ElementSet>;

/// Every intersection-closed family on n <= 4 points containing the full set
/// (and the empty set when with_empty), each sorted.
std::vector<Family> all_moore_families(std::size_t n, bool with_empty);

/// Random intersection-closed family on n points containing the full set and ∅.
Family random_moore_family(std::size_t n, std::mt19937_64& rng);

/// Intersection of the members containing y.
ElementSet close(const Family& family, std::size_t n, ElementSet y);

/// Anti-exchange straight from the definition, plus close(∅) = ∅.
bool is_convex_geometry(const Family& family, std::size_t n);

/// Closed set x ↦ join-irreducible closed sets below it; true iff that
/// representation is a convex geometry.
bool is_convexity_lattice(const Family& family);

/// Closure x ↦ cl({x}) \ {x} closed for every x and ∅ closed.
bool is_standard(const Family& family, std::size_t n);

/// Carathéodory: p lies in the hull of some affinely independent subset of
/// at most d+1 points, solved by exact Gaussian elimination.
bool in_hull(const std::vector<convexity::Point>& points, const convexity::Point& p);

/// Plain backtracking over injective maps, checking joins once all three
/// elements are assigned.
std::optional<std::vector<std::uint32_t>> join_embedding(const convexity::JoinSemilattice& pattern,
                                                         const convexity::JoinSemilattice& host);

/// Largest antichain by enumerating all subsets (size <= 16).
std::size_t max_antichain(const convexity::FinitePoset& poset);

/// Posets on n points whose order extends 0 < 1 < .. < n-1; every
/// isomorphism type occurs at least once.
std::vector<convexity::FinitePoset> natural_posets(std::size_t n);

convexity::FinitePoset random_poset(std::size_t n, double density, std::mt19937_64& rng);

/// Lattices deduplicated by isomorphism, from all Moore families on <= 4
/// points, named families, and seeded random Moore families on 5 and 6 points.
std::vector<convexity::Lattice> lattice_corpus(std::size_t max_size);

}  // namespace oracle
