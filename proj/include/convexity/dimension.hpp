#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "convexity/lattice.hpp"
#include "convexity/poset.hpp"
#include "convexity/semilattice.hpp"
#include "convexity/verdict.hpp"

namespace convexity {

/// Elements with exactly one upper cover (top excluded).
std::vector<Lattice::Index> meet_irreducibles(const Lattice& lattice);

struct ChainCover {
  /// Each chain is listed bottom-up.
  std::vector<std::vector<FinitePoset::Index>> chains;
};

struct ChainCoverResult {
  ChainCover cover;
  /// A maximum antichain of the same subset, from the matching's vertex cover.
  std::vector<FinitePoset::Index> antichain;
};

/// Minimum chain cover of `subset` (Dilworth via bipartite matching). The
/// cover size and antichain size are asserted equal.
ChainCoverResult min_chain_cover(const FinitePoset& poset, const std::vector<FinitePoset::Index>& subset);

struct JoinDimension {
  std::size_t value = 0;
  std::vector<Lattice::Index> meet_irreducibles;
  ChainCoverResult cover;
};

/// Chain-cover number of the meet-irreducibles.
JoinDimension join_dimension(const Lattice& lattice);

struct ChainProductEmbedding {
  /// Maximal chains of the lattice, bottom-up; one per cover chain.
  std::vector<std::vector<Lattice::Index>> chains;
  /// coordinates[x][i] = position in chains[i] of the least member above x.
  std::vector<std::vector<std::size_t>> coordinates;
};

/// x -> (least element of each extended chain above x). Throws InputError if
/// the cover misses a meet-irreducible or lists a non-chain.
ChainProductEmbedding embed_via_chain_covers(const Lattice& lattice, const ChainCover& cover);

/// Re-checks injectivity and preservation of binary joins of an embedding.
bool is_join_embedding(const Lattice& lattice, const ChainProductEmbedding& embedding);

struct DualityReport {
  std::size_t min_cover_over_meet_dense = 0;
  std::vector<Lattice::Index> optimal_meet_dense;
  std::size_t join_dimension = 0;
  Verdict verdict = Verdict::pass();
};

/// Every element is the meet of the members of `subset` above it.
bool is_meet_dense(const Lattice& lattice, const std::vector<Lattice::Index>& subset);

/// min over all meet-dense A of the chain-cover number of A, compared with
/// join_dimension. Exhaustive; lattice size <= bound (default 14).
DualityReport verify_duality(const Lattice& lattice, std::size_t bound = 14);

/// Least k <= k_max such that the semilattice join-embeds into a product of k
/// chains, by exhaustive search (size <= 10, k_max <= 10); none if no k <= k_max works.
std::optional<std::size_t> brute_force_join_dimension(const JoinSemilattice& semilattice, std::size_t k_max);

}  // namespace convexity
