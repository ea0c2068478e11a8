#include "convexity/obstructions.hpp"

#include <algorithm>
#include <numeric>

#include "convexity/errors.hpp"
#include "convexity/orders_gen.hpp"

namespace convexity {

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::boolean: return "boolean";
    case PatternKind::omega_prefix: return "omega";
    case PatternKind::interval_chain: return "interval_chain";
    case PatternKind::custom: return "custom";
  }
  return "custom";
}

Pattern boolean_pattern(std::size_t n) {
  require_within_bound(n, 24, "boolean_pattern");
  auto s = JoinSemilattice::from_function(
      std::size_t{1} << n, [](std::uint32_t a, std::uint32_t b) { return a | b; },
      [n](std::uint32_t a) { return ElementSet(a).to_string(); });
  return Pattern{PatternKind::boolean, n, n <= 10 ? s.materialized() : s};
}

Pattern interval_chain_pattern(std::size_t n) {
  if (n == 0) throw InputError("interval pattern needs n >= 1");
  require_within_bound(n, 100, "interval_chain_pattern");
  // Index 0 is ∅; [lo, hi] sits at 1 + hi(hi+1)/2 + (hi - lo).
  auto index = [](std::uint32_t lo, std::uint32_t hi) { return 1 + hi * (hi + 1) / 2 + (hi - lo); };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bounds{{0, 0}};
  for (std::uint32_t hi = 0; hi < n; ++hi) {
    for (std::uint32_t lo = hi + 1; lo-- > 0;) bounds.emplace_back(lo, hi);
  }
  auto join = [bounds, index](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (a == 0) return b;
    if (b == 0) return a;
    return index(std::min(bounds[a].first, bounds[b].first), std::max(bounds[a].second, bounds[b].second));
  };
  auto label = [bounds](std::uint32_t a) -> std::string {
    if (a == 0) return "∅";
    return "[" + std::to_string(bounds[a].first) + "," + std::to_string(bounds[a].second) + "]";
  };
  auto s = JoinSemilattice::from_function(bounds.size(), join, label);
  return Pattern{PatternKind::interval_chain, n, bounds.size() <= 1024 ? s.materialized() : s};
}

Pattern omega_pattern(std::uint32_t depth) {
  return Pattern{PatternKind::omega_prefix, depth, OmegaPrefix(depth).semilattice()};
}

bool verify_join_embedding(const JoinSemilattice& pattern, const JoinSemilattice& host, const EmbeddingMap& map) {
  if (map.image.size() != pattern.size()) return false;
  std::vector<std::uint32_t> sorted = map.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!sorted.empty() && sorted.back() >= host.size()) return false;
  for (std::uint32_t a = 0; a < pattern.size(); ++a) {
    for (std::uint32_t b = 0; b < pattern.size(); ++b) {
      if (map.image[pattern.join(a, b)] != host.join(map.image[a], map.image[b])) return false;
    }
  }
  return true;
}

namespace {

struct EmbeddingSearch {
  const JoinSemilattice& pattern;
  const JoinSemilattice& host;
  std::vector<std::uint32_t> order;                // linear extension of the pattern
  std::vector<std::uint32_t> position;             // pattern element -> position in order
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> join_pairs;  // x -> earlier (a, b) with a ∨ b = x
  std::vector<std::int64_t> image;
  std::vector<std::uint8_t> used;

  bool consistent(std::uint32_t x, std::uint32_t h, std::size_t depth) const {
    if (used[h]) return false;
    for (auto [a, b] : join_pairs[x]) {
      if (host.join(static_cast<std::uint32_t>(image[a]), static_cast<std::uint32_t>(image[b])) != h) return false;
    }
    for (std::size_t k = 0; k < depth; ++k) {
      const auto z = order[k];
      const auto w = static_cast<std::uint32_t>(image[z]);
      if (pattern.leq(z, x) != host.leq(w, h) || pattern.leq(x, z) != host.leq(h, w)) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const auto x = order[depth];
    if (!join_pairs[x].empty()) {
      const auto [a, b] = join_pairs[x].front();
      const auto forced = host.join(static_cast<std::uint32_t>(image[a]), static_cast<std::uint32_t>(image[b]));
      if (!consistent(x, forced, depth)) return false;
      return assign_and_recurse(x, forced, depth);
    }
    for (std::uint32_t h = 0; h < host.size(); ++h) {
      if (consistent(x, h, depth) && assign_and_recurse(x, h, depth)) return true;
    }
    return false;
  }

  bool assign_and_recurse(std::uint32_t x, std::uint32_t h, std::size_t depth) {
    image[x] = h;
    used[h] = 1;
    if (run(depth + 1)) return true;
    image[x] = -1;
    used[h] = 0;
    return false;
  }
};

}  // namespace

std::optional<EmbeddingMap> embeds_as_join_subsemilattice(const JoinSemilattice& pattern, const JoinSemilattice& host) {
  require_within_bound(pattern.size(), 24, "embeds_as_join_subsemilattice pattern");
  require_within_bound(host.size(), 10000, "embeds_as_join_subsemilattice host");
  if (pattern.size() > host.size()) return std::nullopt;
  const auto n = pattern.size();
  EmbeddingSearch s{pattern, host, {}, std::vector<std::uint32_t>(n), std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>(n),
                    std::vector<std::int64_t>(n, -1), std::vector<std::uint8_t>(host.size(), 0)};
  std::vector<std::size_t> below(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (pattern.leq(b, a)) ++below[a];
    }
  }
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  for (std::uint32_t k = 0; k < n; ++k) s.position[s.order[k]] = k;
  // Joins of two strictly smaller elements are assigned after both parts, so
  // their image is forced; every such pair is re-checked on assignment.
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      const auto j = pattern.join(a, b);
      if (j != a && j != b) s.join_pairs[j].emplace_back(a, b);
    }
  }
  if (!s.run(0)) return std::nullopt;
  EmbeddingMap map{std::vector<std::uint32_t>(s.image.begin(), s.image.end())};
  if (!verify_join_embedding(pattern, host, map)) throw InternalError("embedding search returned an invalid map");
  return map;
}

IndependentSetResult independent_sets(const ClosureSystem& system) {
  const auto n = system.size();
  require_within_bound(n, enumeration_bound(), "independent_sets");
  IndependentSetResult best;
  // Independence is hereditary: y ∉ close(Y∖y) survives shrinking Y.
  auto dfs = [&](auto&& self, ElementSet current, ElementId next) -> void {
    if (current.size() > best.size) best = {current.size(), current};
    for (ElementId e = next; e < n; ++e) {
      if (current.size() + (n - e) <= best.size) return;
      if (system.close(current).contains(e)) continue;
      const auto grown = current.with(e);
      bool ok = true;
      for (auto y : current.ids()) {
        if (system.close(grown.without(y)).contains(y)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, grown, e + 1);
    }
  };
  dfs(dfs, ElementSet{}, 0);
  return best;
}

std::vector<ElementSet> boolean_closure_embedding(const ClosureSystem& system, ElementSet independent) {
  const auto ids = independent.ids();
  require_within_bound(ids.size(), 20, "boolean_closure_embedding");
  std::vector<ElementSet> out(std::size_t{1} << ids.size());
  for (std::size_t mask = 0; mask < out.size(); ++mask) {
    ElementSet subset;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if ((mask >> k) & 1U) subset = subset.with(ids[k]);
    }
    out[mask] = system.close(subset);
  }
  return out;
}

ObstructionReport obstruction_report(const JoinSemilattice& host, std::size_t max_boolean, std::uint32_t max_omega) {
  ObstructionReport report;
  bool failed = false;
  for (std::size_t k = 1; k <= max_boolean; ++k) {
    if (failed) {
      report.entries.push_back({PatternKind::boolean, k, false, true, std::nullopt});
      continue;
    }
    auto map = embeds_as_join_subsemilattice(boolean_pattern(k).semilattice, host);
    failed = !map;
    report.entries.push_back({PatternKind::boolean, k, map.has_value(), false, std::move(map)});
  }
  failed = false;
  for (std::uint32_t depth = 0; depth <= max_omega; ++depth) {
    if (failed) {
      report.entries.push_back({PatternKind::omega_prefix, depth, false, true, std::nullopt});
      continue;
    }
    auto map = embeds_as_join_subsemilattice(omega_pattern(depth).semilattice, host);
    failed = !map;
    report.entries.push_back({PatternKind::omega_prefix, depth, map.has_value(), false, std::move(map)});
  }
  return report;
}

}  // namespace convexity
