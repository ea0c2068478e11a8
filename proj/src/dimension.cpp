#include "convexity/dimension.hpp"

#include <algorithm>
#include <set>

#include "convexity/closure.hpp"
#include "convexity/errors.hpp"

namespace convexity {

std::vector<Lattice::Index> meet_irreducibles(const Lattice& lattice) { return lattice.meet_irreducibles(); }

ChainCoverResult min_chain_cover(const FinitePoset& poset, const std::vector<FinitePoset::Index>& subset) {
  const auto k = subset.size();
  for (auto s : subset) {
    if (s >= poset.size()) throw InputError("chain cover subset element out of range");
  }
  // Split graph: left i -> right j when subset[i] < subset[j].
  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (poset.less(subset[i], subset[j])) adj[i].push_back(j);
    }
  }
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_left(k, kNone), match_right(k, kNone);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> seen(k, false);
    auto augment = [&](auto&& self, std::size_t u) -> bool {
      for (auto v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        if (match_right[v] == kNone || self(self, match_right[v])) {
          match_left[u] = v;
          match_right[v] = u;
          return true;
        }
      }
      return false;
    };
    augment(augment, i);
  }

  ChainCoverResult result;
  for (std::size_t i = 0; i < k; ++i) {
    if (match_right[i] != kNone) continue;
    std::vector<FinitePoset::Index> chain;
    for (auto v = i; v != kNone; v = match_left[v]) chain.push_back(subset[v]);
    result.cover.chains.push_back(std::move(chain));
  }

  // König: Z = vertices reachable from unmatched left vertices along
  // alternating paths; elements with left copy in Z and right copy outside Z
  // form a maximum antichain.
  std::vector<bool> left_z(k, false), right_z(k, false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < k; ++i) {
    if (match_left[i] == kNone) {
      left_z[i] = true;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u]) {
      if (right_z[v] || match_left[u] == v) continue;
      right_z[v] = true;
      const auto w = match_right[v];
      if (w != kNone && !left_z[w]) {
        left_z[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (left_z[i] && !right_z[i]) result.antichain.push_back(subset[i]);
  }
  for (std::size_t a = 0; a < result.antichain.size(); ++a) {
    for (std::size_t b = a + 1; b < result.antichain.size(); ++b) {
      if (poset.comparable(result.antichain[a], result.antichain[b])) throw InternalError("König antichain is not an antichain");
    }
  }
  if (result.antichain.size() != result.cover.chains.size()) {
    throw InternalError("chain cover size " + std::to_string(result.cover.chains.size()) + " differs from antichain size " +
                        std::to_string(result.antichain.size()));
  }
  return result;
}

JoinDimension join_dimension(const Lattice& lattice) {
  JoinDimension out;
  out.meet_irreducibles = lattice.meet_irreducibles();
  out.cover = min_chain_cover(lattice.as_poset(), out.meet_irreducibles);
  out.value = out.cover.cover.chains.size();
  return out;
}

namespace {

std::vector<Lattice::Index> extend_to_maximal_chain(const Lattice& lattice, std::vector<Lattice::Index> chain) {
  chain.push_back(lattice.bottom());
  chain.push_back(lattice.top());
  auto by_order = [&](Lattice::Index a, Lattice::Index b) { return lattice.less(a, b); };
  std::sort(chain.begin(), chain.end(), by_order);
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  while (true) {
    std::optional<Lattice::Index> insert;
    for (Lattice::Index z = 0; z < lattice.size() && !insert; ++z) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (lattice.less(chain[i], z) && lattice.less(z, chain[i + 1])) {
          insert = z;
          break;
        }
      }
    }
    if (!insert) return chain;
    chain.insert(std::upper_bound(chain.begin(), chain.end(), *insert, by_order), *insert);
  }
}

}  // namespace

ChainProductEmbedding embed_via_chain_covers(const Lattice& lattice, const ChainCover& cover) {
  std::set<Lattice::Index> covered;
  for (const auto& chain : cover.chains) {
    for (std::size_t a = 0; a < chain.size(); ++a) {
      if (chain[a] >= lattice.size()) throw InputError("chain element out of range");
      for (std::size_t b = a + 1; b < chain.size(); ++b) {
        if (!lattice.leq(chain[a], chain[b]) && !lattice.leq(chain[b], chain[a])) {
          throw InputError("cover lists a non-chain: " + lattice.label(chain[a]) + " and " + lattice.label(chain[b]) +
                           " are incomparable");
        }
      }
      covered.insert(chain[a]);
    }
  }
  for (auto m : lattice.meet_irreducibles()) {
    if (!covered.contains(m)) throw InputError("cover misses meet-irreducible " + lattice.label(m));
  }
  ChainProductEmbedding out;
  for (const auto& chain : cover.chains) out.chains.push_back(extend_to_maximal_chain(lattice, chain));
  out.coordinates.assign(lattice.size(), {});
  for (Lattice::Index x = 0; x < lattice.size(); ++x) {
    for (const auto& chain : out.chains) {
      auto it = std::find_if(chain.begin(), chain.end(), [&](auto c) { return lattice.leq(x, c); });
      out.coordinates[x].push_back(static_cast<std::size_t>(it - chain.begin()));
    }
  }
  if (!is_join_embedding(lattice, out)) throw InternalError("chain-cover map is not a join-embedding");
  return out;
}

bool is_join_embedding(const Lattice& lattice, const ChainProductEmbedding& embedding) {
  const auto& c = embedding.coordinates;
  if (c.size() != lattice.size()) return false;
  std::set<std::vector<std::size_t>> distinct(c.begin(), c.end());
  if (distinct.size() != c.size()) return false;
  for (Lattice::Index x = 0; x < lattice.size(); ++x) {
    for (Lattice::Index y = 0; y < lattice.size(); ++y) {
      const auto& j = c[lattice.join(x, y)];
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] != std::max(c[x][i], c[y][i])) return false;
      }
    }
  }
  return true;
}

bool is_meet_dense(const Lattice& lattice, const std::vector<Lattice::Index>& subset) {
  for (Lattice::Index x = 0; x < lattice.size(); ++x) {
    std::vector<Lattice::Index> above;
    for (auto a : subset) {
      if (lattice.leq(x, a)) above.push_back(a);
    }
    if (lattice.meet_all(above) != x) return false;
  }
  return true;
}

DualityReport verify_duality(const Lattice& lattice, std::size_t bound) {
  const auto n = lattice.size();
  require_within_bound(n, bound, "verify_duality");
  require_within_bound(n, 24, "verify_duality");
  const auto poset = lattice.as_poset();
  DualityReport report;
  report.join_dimension = join_dimension(lattice).value;
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<Lattice::Index> subset;
    for (Lattice::Index x = 0; x < n; ++x) {
      if ((mask >> x) & 1U) subset.push_back(x);
    }
    if (!is_meet_dense(lattice, subset)) continue;
    const auto width = min_chain_cover(poset, subset).cover.chains.size();
    if (!best || width < *best) {
      best = width;
      report.optimal_meet_dense = subset;
    }
  }
  report.min_cover_over_meet_dense = *best;
  if (*best != report.join_dimension) {
    nlohmann::json optimal = nlohmann::json::array();
    for (auto x : report.optimal_meet_dense) optimal.push_back(lattice.label(x));
    report.verdict = Verdict::fail("min chain cover over meet-dense sets differs from the join dimension",
                                   {{"min_over_meet_dense", *best}, {"join_dimension", report.join_dimension},
                                    {"optimal_set", optimal}});
  }
  return report;
}

std::optional<std::size_t> brute_force_join_dimension(const JoinSemilattice& semilattice, std::size_t k_max) {
  const auto n = semilattice.size();
  require_within_bound(n, 10, "brute_force_join_dimension");
  require_within_bound(k_max, 10, "brute_force_join_dimension k_max");
  // A join-homomorphism into a chain is a chain of subsets D_t = h^-1(<= t),
  // each a down-set closed under joins; it separates x, y iff some D_t holds
  // exactly one of them. Refining to a maximal chain only separates more.
  std::vector<std::uint32_t> ideals;
  for (std::uint32_t d = 0; d < (std::uint32_t{1} << n); ++d) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) {
      if (!((d >> x) & 1U)) continue;
      for (std::uint32_t y = 0; y < n && ok; ++y) {
        if (semilattice.leq(y, x) && !((d >> y) & 1U)) ok = false;
        if (((d >> y) & 1U) && !((d >> semilattice.join(x, y)) & 1U)) ok = false;
      }
    }
    if (ok) ideals.push_back(d);
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  auto proper_subset = [](std::uint32_t a, std::uint32_t b) { return a != b && (a & ~b) == 0; };
  std::vector<std::vector<std::uint32_t>> successors(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (!proper_subset(ideals[i], ideals[j])) continue;
      bool cover = std::none_of(ideals.begin(), ideals.end(), [&](std::uint32_t z) {
        return proper_subset(ideals[i], z) && proper_subset(z, ideals[j]);
      });
      if (cover) successors[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  const std::uint64_t all_pairs = pairs.empty() ? 0 : (pairs.size() == 64 ? ~0ULL : (1ULL << pairs.size()) - 1);
  std::set<std::uint64_t> separations;
  std::vector<std::uint32_t> path;
  const auto start = static_cast<std::size_t>(std::find(ideals.begin(), ideals.end(), 0U) - ideals.begin());
  auto walk = [&](auto&& self, std::size_t at) -> void {
    path.push_back(ideals[at]);
    if (ideals[at] == full) {
      std::uint64_t sep = 0;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (auto d : path) {
          if (((d >> pairs[p].first) & 1U) != ((d >> pairs[p].second) & 1U)) {
            sep |= 1ULL << p;
            break;
          }
        }
      }
      separations.insert(sep);
    } else {
      for (auto next : successors[at]) self(self, next);
    }
    path.pop_back();
  };
  walk(walk, start);
  std::vector<std::uint64_t> masks(separations.begin(), separations.end());
  auto search = [&](auto&& self, std::uint64_t covered, std::size_t left) -> bool {
    if (covered == all_pairs) return true;
    if (left == 0) return false;
    const auto missing = std::countr_zero(~covered & all_pairs);
    for (auto m : masks) {
      if (((m >> missing) & 1U) && self(self, covered | m, left - 1)) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (search(search, 0, k)) return k;
  }
  return std::nullopt;
}

}  // namespace convexity
