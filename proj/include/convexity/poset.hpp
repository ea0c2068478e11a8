#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace convexity {

/// Finite partial order stored transitively closed, with Hasse edges cached.
class FinitePoset {
 public:
  using Index = std::uint32_t;

  /// Builds the order generated by `relations` (pairs a <= b). Throws
  /// InputError on out-of-range ids or a cycle (antisymmetry violation).
  static FinitePoset from_relations(std::vector<std::string> labels,
                                    const std::vector<std::pair<Index, Index>>& relations);
  /// From a full reflexive relation matrix; validated as a partial order.
  static FinitePoset from_matrix(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);
  /// Disjoint union (no comparabilities across parts); labels "i.label".
  static FinitePoset direct_sum(const std::vector<FinitePoset>& parts);

  std::size_t size() const { return labels_.size(); }
  bool leq(Index a, Index b) const { return leq_[a * size() + b] != 0; }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Cover pairs (a, b): a < b with nothing strictly between.
  const std::vector<std::pair<Index, Index>>& hasse() const { return hasse_; }

  /// Greatest lower bound if it exists.
  std::optional<Index> meet(Index a, Index b) const;
  std::optional<Index> join(Index a, Index b) const;

  /// Restriction of the order to `subset` (relabelled 0..k-1 in given order).
  FinitePoset induced(const std::vector<Index>& subset) const;

 private:
  FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> leq);
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::pair<Index, Index>> hasse_;
};

}  // namespace convexity
