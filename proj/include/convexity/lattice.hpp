#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexity/poset.hpp"

namespace convexity {

/// Finite lattice on elements 0..n-1 with precomputed join/meet tables and
/// Hasse covers.
class Lattice {
 public:
  using Index = std::uint32_t;

  /// Computes joins and meets from a partial order; InputError if some pair
  /// lacks a least upper bound or greatest lower bound.
  static Lattice from_poset(const FinitePoset& order);
  /// Validates idempotence, commutativity, associativity, absorption and
  /// that join and meet induce the same order. Validation is O(n^3); callers
  /// that derive tables from a closure system may skip it.
  static Lattice from_tables(std::vector<std::string> labels, std::vector<Index> join, std::vector<Index> meet,
                             bool validate = true);

  static Lattice chain(std::size_t n);
  static Lattice boolean(std::size_t atoms);
  static Lattice m3();
  static Lattice n5();

  std::size_t size() const { return labels_.size(); }
  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
  bool leq(Index a, Index b) const { return join(a, b) == b; }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::vector<Index>& upper_covers(Index i) const { return upper_.at(i); }
  const std::vector<Index>& lower_covers(Index i) const { return lower_.at(i); }
  bool covers(Index lower, Index upper) const;

  /// Elements with exactly one lower cover.
  std::vector<Index> join_irreducibles() const;
  /// Elements with exactly one upper cover (the top is never included).
  std::vector<Index> meet_irreducibles() const;

  /// Join of a set of elements; bottom for the empty set.
  Index join_all(const std::vector<Index>& xs) const;
  /// Meet of a set of elements; top for the empty set.
  Index meet_all(const std::vector<Index>& xs) const;

  Lattice dual() const;
  FinitePoset as_poset() const;

 private:
  Lattice(std::vector<std::string> labels, std::vector<Index> join, std::vector<Index> meet);
  std::vector<std::string> labels_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  std::vector<std::vector<Index>> upper_;
  std::vector<std::vector<Index>> lower_;
  Index bottom_ = 0;
  Index top_ = 0;
};

/// Bijection a -> b with x <= y iff f(x) <= f(y), found by backtracking, or
/// nothing. Works for any pair of finite orders given as leq predicates.
std::optional<std::vector<std::uint32_t>> find_order_isomorphism(const FinitePoset& a, const FinitePoset& b);

inline std::optional<std::vector<std::uint32_t>> find_isomorphism(const Lattice& a, const Lattice& b) {
  return find_order_isomorphism(a.as_poset(), b.as_poset());
}

/// Order-reversing bijection a -> b.
inline std::optional<std::vector<std::uint32_t>> find_anti_isomorphism(const Lattice& a, const Lattice& b) {
  return find_order_isomorphism(a.as_poset(), b.dual().as_poset());
}

}  // namespace convexity
