#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexity/closed_set_lattice.hpp"
#include "convexity/closure.hpp"
#include "convexity/semilattice.hpp"

namespace convexity {

enum class PatternKind { boolean, omega_prefix, interval_chain, custom };

std::string to_string(PatternKind kind);

struct Pattern {
  PatternKind kind = PatternKind::custom;
  std::size_t parameter = 0;
  JoinSemilattice semilattice;
};

/// Finite subsets of {0..n-1} under union; element i is the subset with bitmask i.
Pattern boolean_pattern(std::size_t n);
/// ∅ plus the nonempty intervals of the n-chain under interval hull, in
/// bitmask order of the intervals (by right end, then by decreasing left end).
Pattern interval_chain_pattern(std::size_t n);
Pattern omega_pattern(std::uint32_t depth);

/// Injective join-preserving map, image[pattern element] = host element.
struct EmbeddingMap {
  std::vector<std::uint32_t> image;
};

/// Injective and f(a ∨ b) = f(a) ∨ f(b) for every pattern pair.
bool verify_join_embedding(const JoinSemilattice& pattern, const JoinSemilattice& host, const EmbeddingMap& map);

/// Lexicographically least join-embedding (pattern elements taken in a fixed
/// linear extension), or none. Pattern <= 24 elements, host <= 10000.
std::optional<EmbeddingMap> embeds_as_join_subsemilattice(const JoinSemilattice& pattern, const JoinSemilattice& host);

struct IndependentSetResult {
  std::size_t size = 0;
  ElementSet witness;
};

/// Maximum Y with y ∉ close(Y∖{y}) for every y ∈ Y.
IndependentSetResult independent_sets(const ClosureSystem& system);

/// Image of every subset of `independent` under closure, indexed by the
/// subset's bitmask over the positions of `independent`.
std::vector<ElementSet> boolean_closure_embedding(const ClosureSystem& system, ElementSet independent);

struct ObstructionEntry {
  PatternKind kind;
  std::size_t parameter;
  bool embeds;
  /// True when the answer follows from a smaller pattern failing (patterns of
  /// each family are join-subsemilattices of the next).
  bool inferred;
  std::optional<EmbeddingMap> map;
};

struct ObstructionReport {
  std::vector<ObstructionEntry> entries;
};

/// boolean(k) for 1 <= k <= max_boolean and Ω prefix(M) for 0 <= M <= max_omega.
ObstructionReport obstruction_report(const JoinSemilattice& host, std::size_t max_boolean, std::uint32_t max_omega);

}  // namespace convexity
