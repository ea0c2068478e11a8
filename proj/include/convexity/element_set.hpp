#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace convexity {

using ElementId = std::uint32_t;

/// Subset of a ground set {0, .., 63} stored as a bitmask. Ordering is numeric
/// bitmask order, which is the canonical order for closed-set listings.
class ElementSet {
 public:
  static constexpr std::size_t kMaxElements = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<ElementId> ids) {
    for (auto id : ids) bits_ |= std::uint64_t{1} << id;
  }

  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(ElementId id) { return ElementSet(std::uint64_t{1} << id); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(ElementId id) const { return (bits_ >> id) & 1U; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const { return subset_of(other) && bits_ != other.bits_; }

  constexpr ElementSet with(ElementId id) const { return ElementSet(bits_ | (std::uint64_t{1} << id)); }
  constexpr ElementSet without(ElementId id) const { return ElementSet(bits_ & ~(std::uint64_t{1} << id)); }

  /// Lowest element id; undefined on the empty set.
  constexpr ElementId first() const { return static_cast<ElementId>(std::countr_zero(bits_)); }
  /// Highest element id; undefined on the empty set.
  constexpr ElementId last() const { return static_cast<ElementId>(63 - std::countl_zero(bits_)); }

  std::vector<ElementId> ids() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<ElementId>(std::countr_zero(b)));
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string s = "{";
    bool first_id = true;
    for (auto id : ids()) {
      if (!first_id) s += ',';
      s += std::to_string(id);
      first_id = false;
    }
    return s + '}';
  }

 private:
  std::uint64_t bits_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace convexity
