#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "convexity/closure.hpp"
#include "convexity/lattice.hpp"

namespace convexity {

/// All closed sets of a system in canonical order, with Hasse covers. Joins
/// and meets are tabulated on first use of lattice() when there are at most
/// kTableLimit closed sets, and computed through the closure otherwise.
class ClosedSetLattice {
 public:
  using Index = std::uint32_t;
  static constexpr std::size_t kTableLimit = 2048;

  const ClosureSystem& system() const { return system_; }
  const GroundSet& ground() const { return system_.ground(); }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  ElementSet set(Index i) const { return sets_.at(i); }
  std::optional<Index> index_of(ElementSet s) const;

  Index bottom() const { return 0; }
  Index top() const { return static_cast<Index>(sets_.size() - 1); }
  bool leq(Index a, Index b) const { return sets_[a].subset_of(sets_[b]); }
  /// Index of close(A ∪ B).
  Index join(Index a, Index b) const;
  /// Index of A ∩ B.
  Index meet(Index a, Index b) const;

  const std::vector<Index>& upper_covers(Index i) const { return upper_.at(i); }
  const std::vector<Index>& lower_covers(Index i) const { return lower_.at(i); }
  bool is_join_irreducible(Index i) const { return lower_.at(i).size() == 1; }

  /// Abstract lattice (labels are closed-set contents). Requires size <= kTableLimit.
  const Lattice& lattice() const;

 private:
  friend ClosedSetLattice enumerate_closed_sets(const ClosureSystem& system);
  explicit ClosedSetLattice(ClosureSystem system) : system_(std::move(system)) {}

  ClosureSystem system_;
  std::vector<ElementSet> sets_;
  std::vector<std::vector<Index>> upper_;
  std::vector<std::vector<Index>> lower_;
  struct Tables {
    std::once_flag once;
    std::optional<Lattice> lattice;
  };
  std::shared_ptr<Tables> tables_ = std::make_shared<Tables>();
};

/// Closed sets only, in canonical order (no covers or tables).
std::vector<ElementSet> closed_sets(const ClosureSystem& system);

/// Enumerates the closed sets (NextClosure for intensional rules). Throws
/// CapacityError when the ground set exceeds the enumeration bound.
ClosedSetLattice enumerate_closed_sets(const ClosureSystem& system);

/// Materializes any system into its extensional form.
ClosureSystem materialize(const ClosureSystem& system);

struct MaximalChain {
  std::vector<ElementSet> sets;
  friend bool operator==(const MaximalChain&, const MaximalChain&) = default;
};

/// Up to `limit` distinct bottom-to-top cover paths, in lexicographic order of
/// their index sequences.
std::vector<MaximalChain> maximal_chains(const ClosedSetLattice& lattice, std::size_t limit);

/// Least member of `chain` containing `a`. Throws InputError if the chain is
/// not maximal; the message names a closed set that can be inserted.
ElementSet chain_retraction(const ClosedSetLattice& lattice, const MaximalChain& chain, ElementSet a);

}  // namespace convexity
