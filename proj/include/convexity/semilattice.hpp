#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "convexity/lattice.hpp"
#include "convexity/verdict.hpp"

namespace convexity {

/// Finite join-semilattice on elements 0..n-1. Backed either by a dense join
/// table or, for large structured families (Boolean patterns, deep Ω
/// prefixes), by a join function. The order is derived: a <= b iff a ∨ b = b.
class JoinSemilattice {
 public:
  using Index = std::uint32_t;
  using JoinFn = std::function<Index(Index, Index)>;
  using LabelFn = std::function<std::string(Index)>;

  /// Validates the table (idempotent, commutative, associative).
  static JoinSemilattice from_table(std::vector<std::string> labels, std::vector<Index> table);
  /// Trusted constructor for generated families; `validate()` checks the axioms.
  static JoinSemilattice from_function(std::size_t size, JoinFn join, LabelFn label);
  static JoinSemilattice from_lattice(const Lattice& lattice);

  std::size_t size() const { return size_; }
  Index join(Index a, Index b) const {
    return table_.empty() ? join_fn_(a, b) : table_[static_cast<std::size_t>(a) * size_ + b];
  }
  bool leq(Index a, Index b) const { return join(a, b) == b; }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  std::string label(Index i) const { return labels_.empty() ? label_fn_(i) : labels_.at(i); }
  bool has_table() const { return !table_.empty(); }

  /// Least element, if any.
  std::optional<Index> bottom() const;
  /// Elements that are not the join of two strictly smaller elements.
  std::vector<Index> join_irreducibles() const;
  /// Full axiom check; O(n^3).
  Verdict validate() const;
  /// A finite join-semilattice with a least element is a lattice.
  Lattice to_lattice() const;
  FinitePoset as_poset() const;
  /// Copy with a materialized table (size must be moderate).
  JoinSemilattice materialized() const;

 private:
  JoinSemilattice() = default;
  std::size_t size_ = 0;
  std::vector<Index> table_;
  std::vector<std::string> labels_;
  JoinFn join_fn_;
  LabelFn label_fn_;
};

/// Join-isomorphism (equivalently order isomorphism) between two semilattices.
std::optional<std::vector<std::uint32_t>> find_join_isomorphism(const JoinSemilattice& a, const JoinSemilattice& b);

}  // namespace convexity
