#include "convexity/closed_set_lattice.hpp"

#include <algorithm>

#include "convexity/errors.hpp"

namespace convexity {

std::optional<ClosedSetLattice::Index> ClosedSetLattice::index_of(ElementSet s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<Index>(it - sets_.begin());
}

ClosedSetLattice::Index ClosedSetLattice::join(Index a, Index b) const {
  auto idx = index_of(system_.close(sets_[a] | sets_[b]));
  if (!idx) throw InternalError("closure of a union is missing from the enumeration");
  return *idx;
}

ClosedSetLattice::Index ClosedSetLattice::meet(Index a, Index b) const {
  auto idx = index_of(sets_[a] & sets_[b]);
  if (!idx) throw InternalError("closed family is not intersection-closed");
  return *idx;
}

const Lattice& ClosedSetLattice::lattice() const {
  const auto m = size();
  if (m > kTableLimit) {
    throw CapacityError("closed-set lattice: size " + std::to_string(m) + " exceeds table bound " +
                        std::to_string(kTableLimit));
  }
  std::call_once(tables_->once, [this, m] {
    std::vector<Lattice::Index> join(m * m), meet(m * m);
    std::vector<std::string> labels;
    labels.reserve(m);
    for (Index a = 0; a < m; ++a) {
      labels.push_back(ground().format(sets_[a]));
      for (Index b = a; b < m; ++b) {
        join[a * m + b] = join[b * m + a] = this->join(a, b);
        meet[a * m + b] = meet[b * m + a] = this->meet(a, b);
      }
    }
    tables_->lattice = Lattice::from_tables(std::move(labels), std::move(join), std::move(meet), false);
  });
  return *tables_->lattice;
}

namespace {

// Closed sets in numeric bitmask order. Bit i is more significant than every
// bit below it, so the successor of A flips the lowest position i such that
// closing (A above i) + i adds nothing above i.
std::vector<ElementSet> next_closure_all(const ClosureSystem& system) {
  const auto n = system.size();
  std::vector<ElementSet> out;
  ElementSet current = system.close(ElementSet{});
  out.push_back(current);
  const auto full = system.ground().full();
  while (current != full) {
    bool advanced = false;
    for (ElementId i = 0; i < n; ++i) {
      if (current.contains(i)) continue;
      const auto above = ElementSet::full(n) - ElementSet::full(i + 1);
      const auto candidate = system.close((current & above).with(i));
      if ((candidate & above) == (current & above)) {
        current = candidate;
        out.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InternalError("NextClosure stalled; closure rule is not a closure operator");
  }
  return out;
}

}  // namespace

std::vector<ElementSet> closed_sets(const ClosureSystem& system) {
  require_within_bound(system.size(), enumeration_bound(), "enumerate_closed_sets");
  auto sets = system.is_extensional() ? system.family() : next_closure_all(system);
  if (!std::is_sorted(sets.begin(), sets.end())) std::sort(sets.begin(), sets.end());
  return sets;
}

ClosedSetLattice enumerate_closed_sets(const ClosureSystem& system) {
  ClosedSetLattice result(system);
  result.sets_ = closed_sets(system);
  const auto m = result.sets_.size();
  const auto n = system.size();
  result.upper_.assign(m, {});
  result.lower_.assign(m, {});
  // Upper covers of A are the minimal sets among close(A + x), x outside A.
  for (ClosedSetLattice::Index a = 0; a < m; ++a) {
    const auto base = result.sets_[a];
    std::vector<ElementSet> candidates;
    for (ElementId x = 0; x < n; ++x) {
      if (!base.contains(x)) candidates.push_back(system.close(base.with(x)));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto c : candidates) {
      bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                  [c](ElementSet d) { return d.proper_subset_of(c); });
      if (!minimal) continue;
      auto idx = result.index_of(c);
      if (!idx) throw InternalError("closure of " + c.to_string() + " missing from enumeration");
      result.upper_[a].push_back(*idx);
      result.lower_[*idx].push_back(a);
    }
  }
  for (auto& l : result.lower_) std::sort(l.begin(), l.end());
  return result;
}

ClosureSystem materialize(const ClosureSystem& system) {
  if (system.is_extensional()) return system;
  auto lattice = enumerate_closed_sets(system);
  return ClosureSystem::extensional(system.ground(), lattice.sets());
}

std::vector<MaximalChain> maximal_chains(const ClosedSetLattice& lattice, std::size_t limit) {
  std::vector<MaximalChain> out;
  if (limit == 0) return out;
  std::vector<ClosedSetLattice::Index> path{lattice.bottom()};
  auto dfs = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    const auto last = path.back();
    if (last == lattice.top()) {
      MaximalChain chain;
      for (auto i : path) chain.sets.push_back(lattice.set(i));
      out.push_back(std::move(chain));
      return;
    }
    for (auto next : lattice.upper_covers(last)) {
      path.push_back(next);
      self(self);
      path.pop_back();
      if (out.size() >= limit) return;
    }
  };
  dfs(dfs);
  return out;
}

ElementSet chain_retraction(const ClosedSetLattice& lattice, const MaximalChain& chain, ElementSet a) {
  const auto& ground = lattice.ground();
  if (!ground.contains(a)) throw InputError("subset " + a.to_string() + " leaves the ground set");
  if (chain.sets.empty()) throw InputError("chain is empty; insertable: " + ground.format(lattice.set(lattice.bottom())));
  std::vector<ClosedSetLattice::Index> idx;
  for (auto s : chain.sets) {
    auto i = lattice.index_of(s);
    if (!i) throw InputError("chain member " + ground.format(s) + " is not closed");
    idx.push_back(*i);
  }
  if (idx.front() != lattice.bottom()) {
    throw InputError("chain is not maximal; insertable: " + ground.format(lattice.set(lattice.bottom())));
  }
  if (idx.back() != lattice.top()) {
    throw InputError("chain is not maximal; insertable: " + ground.format(lattice.set(lattice.top())));
  }
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    const auto& up = lattice.upper_covers(idx[k]);
    if (std::find(up.begin(), up.end(), idx[k + 1]) != up.end()) continue;
    for (auto u : up) {
      if (lattice.leq(u, idx[k + 1])) {
        throw InputError("chain is not maximal; insertable: " + ground.format(lattice.set(u)) + " between " +
                         ground.format(chain.sets[k]) + " and " + ground.format(chain.sets[k + 1]));
      }
    }
    throw InputError("chain is not strictly increasing at " + ground.format(chain.sets[k]));
  }
  for (auto s : chain.sets) {
    if (a.subset_of(s)) return s;
  }
  throw InternalError("top of a maximal chain does not contain the ground set");
}

}  // namespace convexity
