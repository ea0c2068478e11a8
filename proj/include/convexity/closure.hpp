#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convexity/element_set.hpp"

namespace convexity {

/// Process-wide cap on ground-set size for exhaustive enumeration (default 20).
std::size_t enumeration_bound();
void set_enumeration_bound(std::size_t bound);

/// Throws CapacityError naming `what` when n exceeds `bound`.
void require_within_bound(std::size_t n, std::size_t bound, const std::string& what);

/// Finite ground set {0, .., size-1} with unique display labels.
class GroundSet {
 public:
  explicit GroundSet(std::size_t size);
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(ElementId id) const { return labels_.at(id); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> index_of(const std::string& label) const;
  ElementSet full() const { return ElementSet::full(size()); }
  bool contains(ElementSet s) const { return s.subset_of(full()); }

  /// "{a,b}" using labels.
  std::string format(ElementSet s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A closure operator on a finite ground set, given either extensionally (the
/// family of closed sets) or intensionally (a subset-to-subset rule). Values are
/// immutable and cheap to copy; intensional rules are memoized per instance.
class ClosureSystem {
 public:
  using Rule = std::function<ElementSet(ElementSet)>;

  /// The family must contain the full ground set and be closed under
  /// intersection; otherwise InputError names the offending sets.
  static ClosureSystem extensional(GroundSet ground, std::vector<ElementSet> family);
  static ClosureSystem intensional(GroundSet ground, Rule rule);

  const GroundSet& ground() const;
  std::size_t size() const { return ground().size(); }
  bool is_extensional() const;

  /// Closed family in canonical (numeric bitmask) order; extensional only.
  const std::vector<ElementSet>& family() const;

  /// Least closed superset of y. Throws InputError when y leaves the ground set.
  ElementSet close(ElementSet y) const;
  bool is_closed(ElementSet y) const { return close(y) == y; }

 private:
  struct State;
  explicit ClosureSystem(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  std::shared_ptr<const State> state_;
};

/// Induced closure on x_prime: Y -> close(Y) ∩ X'. Elements of x_prime are
/// renumbered 0.. in increasing id order and keep their labels.
ClosureSystem restrict(const ClosureSystem& system, ElementSet x_prime);

/// Maps a set over the restricted ground set back to original ids.
ElementSet lift_from_restriction(ElementSet x_prime, ElementSet restricted);
/// Maps a subset of x_prime (original ids) to restricted ids.
ElementSet project_to_restriction(ElementSet x_prime, ElementSet original);

/// Closure Y -> ⋂_k close_k(Y); closed sets are all intersections of one closed
/// set per system.
ClosureSystem join_of_systems(std::span<const ClosureSystem> systems);

}  // namespace convexity
