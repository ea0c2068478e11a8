#include "convexity/geometry_verify.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "convexity/errors.hpp"

namespace convexity {

namespace {

using nlohmann::json;

json labels_of(const GroundSet& ground, ElementSet s) {
  json out = json::array();
  for (auto id : s.ids()) out.push_back(ground.label(id));
  return out;
}

}  // namespace

Verdict check_zero_closed(const ClosureSystem& system) {
  const auto bottom = system.close(ElementSet{});
  if (bottom.empty()) return Verdict::pass();
  return Verdict::fail("close(∅) = " + system.ground().format(bottom) + " is not empty",
                       {{"close_of_empty", labels_of(system.ground(), bottom)}});
}

Verdict check_anti_exchange(const ClosureSystem& system) {
  const auto& ground = system.ground();
  const auto n = system.size();
  std::vector<ElementSet> extended(n);
  for (auto a : closed_sets(system)) {
    for (ElementId x = 0; x < n; ++x) {
      if (!a.contains(x)) extended[x] = system.close(a.with(x));
    }
    for (ElementId x = 0; x < n; ++x) {
      if (a.contains(x)) continue;
      for (ElementId y = x + 1; y < n; ++y) {
        if (a.contains(y)) continue;
        if (extended[y].contains(x) && extended[x].contains(y)) {
          return Verdict::fail("anti-exchange fails: " + ground.label(x) + " and " + ground.label(y) +
                                   " each enter the closure of the other over " + ground.format(a),
                               {{"A", labels_of(ground, a)}, {"x", ground.label(x)}, {"y", ground.label(y)}});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_convex_geometry(const ClosureSystem& system) {
  if (auto v = check_zero_closed(system); !v) return v;
  return check_anti_exchange(system);
}

Verdict check_cover_structure(const ClosedSetLattice& lattice) {
  const auto& ground = lattice.ground();
  const auto& system = lattice.system();
  for (ClosedSetLattice::Index a = 0; a < lattice.size(); ++a) {
    for (auto b : lattice.upper_covers(a)) {
      const auto diff = lattice.set(b) - lattice.set(a);
      if (diff.size() != 1) {
        return Verdict::fail("cover " + ground.format(lattice.set(a)) + " ⋖ " + ground.format(lattice.set(b)) +
                                 " adds " + std::to_string(diff.size()) + " elements",
                             {{"lower", labels_of(ground, lattice.set(a))}, {"upper", labels_of(ground, lattice.set(b))}});
      }
      const auto x = diff.first();
      const auto px = lattice.index_of(system.close(ElementSet::singleton(x)));
      if (!px || !lattice.is_join_irreducible(*px)) {
        return Verdict::fail("closure of {" + ground.label(x) + "} is not join-irreducible",
                             {{"lower", labels_of(ground, lattice.set(a))},
                              {"upper", labels_of(ground, lattice.set(b))},
                              {"x", ground.label(x)}});
      }
    }
  }
  return Verdict::pass();
}

SpatialReduction spatial_support_reduction(const ClosureSystem& system) {
  if (auto v = is_convex_geometry(system); !v) {
    throw InputError("spatial reduction requires a convex geometry: " + v.description());
  }
  const auto lattice = enumerate_closed_sets(system);
  ElementSet support;
  for (ElementId y = 0; y < system.size(); ++y) {
    auto idx = lattice.index_of(system.close(ElementSet::singleton(y)));
    if (idx && lattice.is_join_irreducible(*idx)) support = support.with(y);
  }
  if (support.empty()) throw InternalError("spatial reduction found no join-irreducible singleton closures");
  SpatialReduction out{support, restrict(system, support), {}};
  const auto reduced_sets = closed_sets(out.reduced);
  std::unordered_set<ElementSet, ElementSetHash> image;
  for (auto a : lattice.sets()) {
    const auto r = project_to_restriction(support, a & support);
    if (!std::binary_search(reduced_sets.begin(), reduced_sets.end(), r) || !image.insert(r).second) {
      throw InternalError("A -> A ∩ Y is not injective into the reduced closed sets");
    }
    out.correspondence.emplace_back(a, r);
  }
  if (image.size() != reduced_sets.size()) throw InternalError("A -> A ∩ Y is not surjective");
  return out;
}

Verdict check_convexity_characterization(const Lattice& lattice) {
  const auto ji = lattice.join_irreducibles();
  for (Lattice::Index x = 0; x < lattice.size(); ++x) {
    std::vector<Lattice::Index> below;
    for (auto j : ji) {
      if (lattice.leq(j, x)) below.push_back(j);
    }
    if (lattice.join_all(below) != x) {
      return Verdict::fail("element " + lattice.label(x) + " is not a join of join-irreducibles",
                           {{"element", lattice.label(x)}});
    }
  }
  for (Lattice::Index y = 0; y < lattice.size(); ++y) {
    for (std::size_t i = 0; i < ji.size(); ++i) {
      const auto yu = lattice.join(y, ji[i]);
      if (yu == y) continue;
      for (std::size_t k = i + 1; k < ji.size(); ++k) {
        if (lattice.join(y, ji[k]) == yu) {
          return Verdict::fail("y < y∨u = y∨v with u ≠ v for y = " + lattice.label(y) + ", u = " +
                                   lattice.label(ji[i]) + ", v = " + lattice.label(ji[k]),
                               {{"y", lattice.label(y)}, {"u", lattice.label(ji[i])}, {"v", lattice.label(ji[k])}});
        }
      }
    }
  }
  return Verdict::pass();
}

ClosureSystem convex_geometry_from_lattice(const Lattice& lattice) {
  if (auto v = check_convexity_characterization(lattice); !v) {
    throw InputError("lattice is not a convexity lattice: " + v.description());
  }
  const auto ji = lattice.join_irreducibles();
  if (ji.empty()) throw InputError("a one-element lattice has no join-irreducibles to form a ground set");
  std::vector<std::string> labels;
  for (auto j : ji) labels.push_back(lattice.label(j));
  return ClosureSystem::intensional(GroundSet(std::move(labels)), [lattice, ji](ElementSet y) {
    std::vector<Lattice::Index> members;
    for (auto id : y.ids()) members.push_back(ji[id]);
    const auto top = lattice.join_all(members);
    ElementSet out;
    for (ElementId p = 0; p < ji.size(); ++p) {
      if (lattice.leq(ji[p], top)) out = out.with(p);
    }
    return out;
  });
}

namespace {

std::vector<std::size_t> ranks_of(const ClosureSystem& system, std::span<const ElementId> ordering) {
  const auto n = system.size();
  if (ordering.size() != n) throw InputError("ordering must list every ground element exactly once");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t pos = 0; pos < ordering.size(); ++pos) {
    const auto id = ordering[pos];
    if (id >= n || rank[id] != n) throw InputError("ordering must list every ground element exactly once");
    rank[id] = pos;
  }
  return rank;
}

}  // namespace

Verdict check_super_solvable(const ClosureSystem& system, std::span<const ElementId> ordering) {
  const auto rank = ranks_of(system, ordering);
  const auto& ground = system.ground();
  const auto sets = closed_sets(system);
  for (auto a : sets) {
    for (auto b : sets) {
      const auto diff = a - b;
      if (diff.empty()) continue;
      auto ids = diff.ids();
      const auto least = *std::min_element(ids.begin(), ids.end(), [&](auto p, auto q) { return rank[p] < rank[q]; });
      if (!system.is_closed(a.without(least))) {
        return Verdict::fail("removing " + ground.label(least) + " from " + ground.format(a) + " (against " +
                                 ground.format(b) + ") leaves a non-closed set",
                             {{"A", labels_of(ground, a)}, {"B", labels_of(ground, b)}, {"a", ground.label(least)}});
      }
    }
  }
  return Verdict::pass();
}

std::optional<std::vector<ElementId>> find_super_solvable_order(const ClosureSystem& system) {
  const auto n = system.size();
  require_within_bound(n, 10, "find_super_solvable_order");
  const auto sets = closed_sets(system);
  // An element e may follow the placed prefix P iff every closed A ∋ e with
  // A∖{e} not closed has e ∈ close(A ∩ P): otherwise some closed B ⊇ A ∩ P
  // misses e, and e is then the least element of A∖B. The test depends only
  // on the set P, so dead prefixes are memoized by set.
  std::vector<std::vector<ElementSet>> critical(n);
  for (auto a : sets) {
    for (auto e : a.ids()) {
      if (!system.is_closed(a.without(e))) critical[e].push_back(a);
    }
  }
  std::unordered_set<ElementSet, ElementSetHash> dead;
  std::vector<ElementId> order;
  auto dfs = [&](auto&& self, ElementSet placed) -> bool {
    if (placed.size() == n) return true;
    if (dead.contains(placed)) return false;
    for (ElementId e = 0; e < n; ++e) {
      if (placed.contains(e)) continue;
      bool ok = std::all_of(critical[e].begin(), critical[e].end(),
                            [&](ElementSet a) { return system.close(a & placed).contains(e); });
      if (!ok) continue;
      order.push_back(e);
      if (self(self, placed.with(e))) return true;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (!dfs(dfs, ElementSet{})) return std::nullopt;
  return order;
}

namespace {

struct ForbiddenSublattice {
  const char* kind;
  std::array<Lattice::Index, 5> elements;  // bottom, a, b, c, top
};

std::optional<ForbiddenSublattice> find_n5(const Lattice& l) {
  const auto n = l.size();
  for (Lattice::Index a = 0; a < n; ++a) {
    for (Lattice::Index b = 0; b < n; ++b) {
      if (!l.less(a, b)) continue;
      for (Lattice::Index c = 0; c < n; ++c) {
        if (l.leq(c, b) || l.leq(b, c) || l.leq(c, a) || l.leq(a, c)) continue;
        if (l.join(a, c) == l.join(b, c) && l.meet(a, c) == l.meet(b, c)) {
          return ForbiddenSublattice{"N5", {l.meet(a, c), a, b, c, l.join(a, c)}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenSublattice> find_m3(const Lattice& l) {
  const auto n = l.size();
  auto incomparable = [&](auto x, auto y) { return !l.leq(x, y) && !l.leq(y, x); };
  for (Lattice::Index a = 0; a < n; ++a) {
    for (Lattice::Index b = a + 1; b < n; ++b) {
      if (!incomparable(a, b)) continue;
      const auto top = l.join(a, b);
      const auto bottom = l.meet(a, b);
      for (Lattice::Index c = b + 1; c < n; ++c) {
        if (!incomparable(a, c) || !incomparable(b, c)) continue;
        if (l.join(a, c) == top && l.join(b, c) == top && l.meet(a, c) == bottom && l.meet(b, c) == bottom) {
          return ForbiddenSublattice{"M3", {bottom, a, b, c, top}};
        }
      }
    }
  }
  return std::nullopt;
}

Verdict forbidden_verdict(const Lattice& l, const ForbiddenSublattice& f, const std::string& property) {
  json w;
  w["kind"] = f.kind;
  w["bottom"] = l.label(f.elements[0]);
  w["a"] = l.label(f.elements[1]);
  w["b"] = l.label(f.elements[2]);
  w["c"] = l.label(f.elements[3]);
  w["top"] = l.label(f.elements[4]);
  return Verdict::fail(std::string("not ") + property + ": contains " + f.kind + " sublattice", w);
}

constexpr std::size_t kForbiddenSearchLimit = 200;

}  // namespace

Verdict is_distributive(const Lattice& l) {
  const auto n = l.size();
  std::optional<std::array<Lattice::Index, 3>> law_failure;
  for (Lattice::Index x = 0; x < n && !law_failure; ++x) {
    for (Lattice::Index y = 0; y < n && !law_failure; ++y) {
      for (Lattice::Index z = 0; z < n && !law_failure; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) law_failure = {x, y, z};
      }
    }
  }
  if (n > kForbiddenSearchLimit) {
    if (!law_failure) return Verdict::pass();
    const auto [x, y, z] = *law_failure;
    return Verdict::fail("not distributive: x∧(y∨z) ≠ (x∧y)∨(x∧z)",
                         {{"kind", "law"}, {"x", l.label(x)}, {"y", l.label(y)}, {"z", l.label(z)}});
  }
  auto forbidden = find_n5(l);
  if (!forbidden) forbidden = find_m3(l);
  if (forbidden.has_value() != law_failure.has_value()) {
    throw InternalError("distributive law and forbidden-sublattice search disagree");
  }
  if (!forbidden) return Verdict::pass();
  return forbidden_verdict(l, *forbidden, "distributive");
}

Verdict is_modular(const Lattice& l) {
  const auto n = l.size();
  std::optional<std::array<Lattice::Index, 3>> law_failure;
  for (Lattice::Index x = 0; x < n && !law_failure; ++x) {
    for (Lattice::Index z = 0; z < n && !law_failure; ++z) {
      if (!l.leq(x, z)) continue;
      for (Lattice::Index y = 0; y < n && !law_failure; ++y) {
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) law_failure = {x, y, z};
      }
    }
  }
  if (n > kForbiddenSearchLimit) {
    if (!law_failure) return Verdict::pass();
    const auto [x, y, z] = *law_failure;
    return Verdict::fail("not modular: x <= z but x∨(y∧z) ≠ (x∨y)∧z",
                         {{"kind", "law"}, {"x", l.label(x)}, {"y", l.label(y)}, {"z", l.label(z)}});
  }
  auto forbidden = find_n5(l);
  if (forbidden.has_value() != law_failure.has_value()) {
    throw InternalError("modular law and N5 search disagree");
  }
  if (!forbidden) return Verdict::pass();
  return forbidden_verdict(l, *forbidden, "modular");
}

ClosureSystem antimatroid_from_distributive(const Lattice& lattice) {
  if (auto v = is_distributive(lattice); !v) {
    throw InputError("antimatroid construction requires a distributive lattice: " + v.description());
  }
  const auto mi = lattice.meet_irreducibles();
  if (mi.empty()) throw InputError("a one-element lattice has no meet-irreducibles to form a ground set");
  std::vector<std::string> labels;
  for (auto m : mi) labels.push_back(lattice.label(m));
  return ClosureSystem::intensional(GroundSet(std::move(labels)), [lattice, mi](ElementSet y) {
    std::vector<Lattice::Index> members;
    for (auto id : y.ids()) members.push_back(mi[id]);
    const auto low = lattice.meet_all(members);
    ElementSet out;
    for (ElementId m = 0; m < mi.size(); ++m) {
      if (lattice.leq(low, mi[m])) out = out.with(m);
    }
    return out;
  });
}

}  // namespace convexity
