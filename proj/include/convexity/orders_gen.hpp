#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "convexity/closure.hpp"
#include "convexity/lattice.hpp"
#include "convexity/poset.hpp"
#include "convexity/semilattice.hpp"

namespace convexity {

/// Closed sets are the intervals of the n-chain 0 < 1 < .. < n-1 (plus ∅).
ClosureSystem interval_system(std::size_t n);
/// Closed sets are the down-sets of the n-chain.
ClosureSystem initial_system(std::size_t n);
/// Closed sets are the up-sets of the n-chain.
ClosureSystem final_system(std::size_t n);

/// Interval A of an n-chain against its pair of segments (↓A, ↑A).
class IntervalFactorization {
 public:
  explicit IntervalFactorization(std::size_t n);

  std::size_t size() const { return n_; }
  /// (↓A, ↑A) for a nonempty interval A.
  std::pair<ElementSet, ElementSet> embed(ElementSet interval) const;
  /// I ∩ J for an initial segment I and a final segment J.
  ElementSet meet(ElementSet initial, ElementSet final_segment) const;

 private:
  std::size_t n_;
};

/// Ground set with k linear orders, each stored as a rank vector
/// (rank[x] = position of x, 0 = least).
class Multichain {
 public:
  Multichain(GroundSet ground, std::vector<std::vector<std::uint32_t>> ranks);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::size_t order_count() const { return ranks_.size(); }
  const std::vector<std::uint32_t>& ranks(std::size_t k) const { return ranks_.at(k); }
  bool less_in(std::size_t k, ElementId a, ElementId b) const { return ranks_[k][a] < ranks_[k][b]; }
  bool leq_in(std::size_t k, ElementId a, ElementId b) const { return ranks_[k][a] <= ranks_[k][b]; }

 private:
  GroundSet ground_;
  std::vector<std::vector<std::uint32_t>> ranks_;
};

/// Join of the initial-segment systems of every order (at most 6 orders, 16 elements).
ClosureSystem multichain_system(const Multichain& m);

/// ([n], natural order, i <= j iff sigma(i) <= sigma(j)).
Multichain bichain_from_permutation(const std::vector<std::uint32_t>& sigma);

/// Pairs (a, b) with b <=₁ a and a <=₂ b, joined componentwise (max in the
/// first order, max in the second). Labels are "(a,b)" with ground labels.
JoinSemilattice delta_semilattice(const Multichain& bichain);
/// Join-closure of the diagonal {(x, x)} in the product of the two chains,
/// by fixpoint iteration. Same element order as delta_semilattice.
JoinSemilattice diagonal_join_closure(const Multichain& bichain);
/// Δ with a least element adjoined (index 0, label "⊥").
JoinSemilattice delta_with_bottom(const Multichain& bichain);

/// All closed sets under (A, B) -> close(A ∪ B); bottom is close(∅).
JoinSemilattice compact_semilattice_of_geometry(const ClosureSystem& system);

/// Dyadic rational numerator / 2^exponent.
struct Dyadic {
  std::uint64_t numerator = 0;
  std::uint32_t exponent = 0;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const auto e = std::max(a.exponent, b.exponent);
    return (a.numerator << (e - a.exponent)) <=> (b.numerator << (e - b.exponent));
  }
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return (a <=> b) == 0; }
  /// Reduced form: "0", "1/2", "3/8".
  std::string to_string() const;
};

/// Element (n, k / 2^n) of an Ω prefix.
struct OmegaElement {
  std::uint32_t level = 0;
  Dyadic value;
};

/// Depth-N prefix of the Ω construction: elements (n, k/2^n) for 0 <= n <= N,
/// 0 <= k < 2^n, ordered componentwise. Indexed level by level:
/// index(n, k) = 2^n - 1 + k.
class OmegaPrefix {
 public:
  explicit OmegaPrefix(std::uint32_t depth);

  std::uint32_t depth() const { return depth_; }
  std::size_t size() const { return (std::size_t{2} << depth_) - 1; }
  OmegaElement element(std::uint32_t index) const;
  std::uint32_t index_of(const OmegaElement& e) const;
  /// Componentwise join, as an index.
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const;
  std::string label(std::uint32_t index) const;
  JoinSemilattice semilattice() const;

 private:
  std::uint32_t depth_;
};

/// Closed sets are subsets of S closed under the meet of S (∅ included).
/// Throws InputError naming a pair without a meet.
ClosureSystem subsemilattice_system(const FinitePoset& s);

/// Strict comparable pairs (a, b), a < b, in lexicographic order, labelled "a<b".
std::vector<std::pair<FinitePoset::Index, FinitePoset::Index>> strict_pairs(const FinitePoset& p);
/// Ground set = strict pairs; closed sets = transitively closed subsets.
ClosureSystem suborder_system(const FinitePoset& p);

/// Down-set lattice of a poset (ordered by inclusion).
ClosureSystem downset_system(const FinitePoset& p);

}  // namespace convexity
