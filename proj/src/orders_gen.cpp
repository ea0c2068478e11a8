#include "convexity/orders_gen.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "convexity/closed_set_lattice.hpp"
#include "convexity/errors.hpp"

namespace convexity {

namespace {

void require_chain_length(std::size_t n) {
  if (n == 0) throw InputError("chain length must be at least 1");
  if (n > ElementSet::kMaxElements) {
    throw CapacityError("chain length " + std::to_string(n) + " exceeds bitmask width 64");
  }
}

// {lo, .., hi}
ElementSet range_set(ElementId lo, ElementId hi) { return ElementSet::full(hi + 1) - ElementSet::full(lo); }

bool is_interval(ElementSet s) { return !s.empty() && s == range_set(s.first(), s.last()); }

}  // namespace

ClosureSystem interval_system(std::size_t n) {
  require_chain_length(n);
  std::vector<ElementSet> family{ElementSet{}};
  for (ElementId lo = 0; lo < n; ++lo) {
    for (ElementId hi = lo; hi < n; ++hi) family.push_back(range_set(lo, hi));
  }
  return ClosureSystem::extensional(GroundSet(n), std::move(family));
}

ClosureSystem initial_system(std::size_t n) {
  require_chain_length(n);
  std::vector<ElementSet> family;
  for (std::size_t k = 0; k <= n; ++k) family.push_back(ElementSet::full(k));
  return ClosureSystem::extensional(GroundSet(n), std::move(family));
}

ClosureSystem final_system(std::size_t n) {
  require_chain_length(n);
  std::vector<ElementSet> family{ElementSet{}};
  for (ElementId lo = 0; lo < n; ++lo) family.push_back(range_set(lo, static_cast<ElementId>(n - 1)));
  return ClosureSystem::extensional(GroundSet(n), std::move(family));
}

IntervalFactorization::IntervalFactorization(std::size_t n) : n_(n) { require_chain_length(n); }

std::pair<ElementSet, ElementSet> IntervalFactorization::embed(ElementSet interval) const {
  if (!interval.subset_of(ElementSet::full(n_)) || !is_interval(interval)) {
    throw InputError(interval.to_string() + " is not a nonempty interval of the " + std::to_string(n_) + "-chain");
  }
  return {ElementSet::full(interval.last() + 1), range_set(interval.first(), static_cast<ElementId>(n_ - 1))};
}

ElementSet IntervalFactorization::meet(ElementSet initial, ElementSet final_segment) const {
  const auto full = ElementSet::full(n_);
  if (!initial.subset_of(full) || initial != ElementSet::full(initial.size())) {
    throw InputError(initial.to_string() + " is not an initial segment");
  }
  if (!final_segment.subset_of(full) || final_segment != full - ElementSet::full(n_ - final_segment.size())) {
    throw InputError(final_segment.to_string() + " is not a final segment");
  }
  return initial & final_segment;
}

Multichain::Multichain(GroundSet ground, std::vector<std::vector<std::uint32_t>> ranks)
    : ground_(std::move(ground)), ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw InputError("multichain needs at least one order");
  const auto n = ground_.size();
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    const auto& r = ranks_[k];
    std::vector<bool> seen(n, false);
    if (r.size() != n) throw InputError("order " + std::to_string(k) + " does not rank every element");
    for (auto v : r) {
      if (v >= n || seen[v]) throw InputError("order " + std::to_string(k) + " is not a linear order (ranks must be a permutation)");
      seen[v] = true;
    }
  }
}

ClosureSystem multichain_system(const Multichain& m) {
  if (m.order_count() > 6) throw CapacityError("multichain_system: order count " + std::to_string(m.order_count()) + " exceeds bound 6");
  require_within_bound(m.size(), 16, "multichain_system");
  std::vector<ClosureSystem> parts;
  for (std::size_t k = 0; k < m.order_count(); ++k) {
    parts.push_back(ClosureSystem::intensional(m.ground(), [ranks = m.ranks(k)](ElementSet y) {
      if (y.empty()) return y;
      std::uint32_t top = 0;
      for (auto id : y.ids()) top = std::max(top, ranks[id]);
      ElementSet out;
      for (ElementId x = 0; x < ranks.size(); ++x) {
        if (ranks[x] <= top) out = out.with(x);
      }
      return out;
    }));
  }
  return join_of_systems(parts);
}

Multichain bichain_from_permutation(const std::vector<std::uint32_t>& sigma) {
  if (sigma.empty()) throw InputError("permutation must be nonempty");
  std::vector<std::uint32_t> identity(sigma.size());
  std::iota(identity.begin(), identity.end(), 0);
  auto sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity) throw InputError("input is not a permutation of 0..n-1");
  return Multichain(GroundSet(sigma.size()), {identity, sigma});
}

namespace {

using Pair = std::pair<ElementId, ElementId>;

JoinSemilattice pair_semilattice(const Multichain& b, const std::vector<Pair>& pairs, bool with_bottom) {
  const auto n = b.size();
  const std::size_t offset = with_bottom ? 1 : 0;
  const auto m = pairs.size() + offset;
  std::vector<std::uint32_t> index(n * n, UINT32_MAX);
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i].first * n + pairs[i].second] = static_cast<std::uint32_t>(i + offset);
  std::vector<std::string> labels;
  if (with_bottom) labels.push_back("⊥");
  for (auto [a, c] : pairs) labels.push_back("(" + b.ground().label(a) + "," + b.ground().label(c) + ")");
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (with_bottom && (i == 0 || j == 0)) {
        table[i * m + j] = static_cast<std::uint32_t>(i == 0 ? j : i);
        continue;
      }
      const auto [a1, b1] = pairs[i - offset];
      const auto [a2, b2] = pairs[j - offset];
      const auto first = b.leq_in(0, a1, a2) ? a2 : a1;
      const auto second = b.leq_in(1, b1, b2) ? b2 : b1;
      const auto idx = index[first * n + second];
      if (idx == UINT32_MAX) throw InternalError("pair set is not closed under componentwise join");
      table[i * m + j] = idx;
    }
  }
  return JoinSemilattice::from_table(std::move(labels), std::move(table));
}

void require_bichain(const Multichain& b) {
  if (b.order_count() != 2) {
    throw InputError("Δ construction needs a bichain (2 orders), got " + std::to_string(b.order_count()));
  }
}

std::vector<Pair> delta_pairs(const Multichain& b) {
  std::vector<Pair> pairs;
  for (ElementId a = 0; a < b.size(); ++a) {
    for (ElementId c = 0; c < b.size(); ++c) {
      if (b.leq_in(0, c, a) && b.leq_in(1, a, c)) pairs.emplace_back(a, c);
    }
  }
  return pairs;
}

}  // namespace

JoinSemilattice delta_semilattice(const Multichain& bichain) {
  require_bichain(bichain);
  return pair_semilattice(bichain, delta_pairs(bichain), false);
}

JoinSemilattice delta_with_bottom(const Multichain& bichain) {
  require_bichain(bichain);
  return pair_semilattice(bichain, delta_pairs(bichain), true);
}

JoinSemilattice diagonal_join_closure(const Multichain& bichain) {
  require_bichain(bichain);
  std::set<Pair> closure;
  for (ElementId x = 0; x < bichain.size(); ++x) closure.emplace(x, x);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Pair> current(closure.begin(), closure.end());
    for (const auto& [a1, b1] : current) {
      for (const auto& [a2, b2] : current) {
        Pair j{bichain.leq_in(0, a1, a2) ? a2 : a1, bichain.leq_in(1, b1, b2) ? b2 : b1};
        grew = closure.insert(j).second || grew;
      }
    }
  }
  return pair_semilattice(bichain, std::vector<Pair>(closure.begin(), closure.end()), false);
}

JoinSemilattice compact_semilattice_of_geometry(const ClosureSystem& system) {
  const auto lattice = enumerate_closed_sets(system);
  const auto m = lattice.size();
  require_within_bound(m, ClosedSetLattice::kTableLimit, "compact_semilattice_of_geometry");
  std::vector<std::string> labels;
  std::vector<std::uint32_t> table(m * m);
  for (std::uint32_t a = 0; a < m; ++a) {
    labels.push_back(system.ground().format(lattice.set(a)));
    for (std::uint32_t b = a; b < m; ++b) table[a * m + b] = table[b * m + a] = lattice.join(a, b);
  }
  return JoinSemilattice::from_table(std::move(labels), std::move(table));
}

std::string Dyadic::to_string() const {
  if (numerator == 0) return "0";
  auto num = numerator;
  auto exp = exponent;
  while (exp > 0 && num % 2 == 0) {
    num /= 2;
    --exp;
  }
  if (exp == 0) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(std::uint64_t{1} << exp);
}

OmegaPrefix::OmegaPrefix(std::uint32_t depth) : depth_(depth) {
  if (depth > 12) throw CapacityError("omega_prefix: depth " + std::to_string(depth) + " exceeds bound 12");
}

OmegaElement OmegaPrefix::element(std::uint32_t index) const {
  if (index >= size()) throw InputError("Ω prefix index out of range");
  const auto level = static_cast<std::uint32_t>(std::bit_width(index + 1) - 1);
  const auto k = index + 1 - (std::uint32_t{1} << level);
  return OmegaElement{level, Dyadic{k, level}};
}

std::uint32_t OmegaPrefix::index_of(const OmegaElement& e) const {
  if (e.level > depth_ || e.value.exponent > e.level) throw InputError("element is not in the Ω prefix");
  const auto k = e.value.numerator << (e.level - e.value.exponent);
  if (k >= (std::uint64_t{1} << e.level)) throw InputError("element is not in the Ω prefix");
  return (std::uint32_t{1} << e.level) - 1 + static_cast<std::uint32_t>(k);
}

std::uint32_t OmegaPrefix::join(std::uint32_t a, std::uint32_t b) const {
  const auto x = element(a);
  const auto y = element(b);
  const auto level = std::max(x.level, y.level);
  const auto value = std::max(x.value, y.value);
  return index_of(OmegaElement{level, value});
}

std::string OmegaPrefix::label(std::uint32_t index) const {
  const auto e = element(index);
  return "(" + std::to_string(e.level) + "," + e.value.to_string() + ")";
}

JoinSemilattice OmegaPrefix::semilattice() const {
  const OmegaPrefix copy = *this;
  auto s = JoinSemilattice::from_function(
      size(), [copy](std::uint32_t a, std::uint32_t b) { return copy.join(a, b); },
      [copy](std::uint32_t i) { return copy.label(i); });
  return size() <= 1024 ? s.materialized() : s;
}

ClosureSystem subsemilattice_system(const FinitePoset& s) {
  const auto n = s.size();
  if (n == 0) throw InputError("poset must be nonempty");
  std::vector<FinitePoset::Index> meet(n * n);
  for (FinitePoset::Index a = 0; a < n; ++a) {
    for (FinitePoset::Index b = 0; b < n; ++b) {
      auto m = s.meet(a, b);
      if (!m) throw InputError("not a meet-semilattice: '" + s.label(a) + "' and '" + s.label(b) + "' have no meet");
      meet[a * n + b] = *m;
    }
  }
  return ClosureSystem::intensional(GroundSet(s.labels()), [meet, n](ElementSet y) {
    ElementSet out = y;
    bool grew = true;
    while (grew) {
      grew = false;
      const auto ids = out.ids();
      for (auto a : ids) {
        for (auto b : ids) {
          const auto m = meet[a * n + b];
          if (!out.contains(m)) {
            out = out.with(m);
            grew = true;
          }
        }
      }
    }
    return out;
  });
}

std::vector<std::pair<FinitePoset::Index, FinitePoset::Index>> strict_pairs(const FinitePoset& p) {
  std::vector<std::pair<FinitePoset::Index, FinitePoset::Index>> out;
  for (FinitePoset::Index a = 0; a < p.size(); ++a) {
    for (FinitePoset::Index b = 0; b < p.size(); ++b) {
      if (p.less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

ClosureSystem suborder_system(const FinitePoset& p) {
  const auto pairs = strict_pairs(p);
  if (pairs.empty()) throw InputError("poset has no strict comparabilities; the suborder ground set is empty");
  require_within_bound(pairs.size(), enumeration_bound(), "suborder_system");
  std::map<std::pair<FinitePoset::Index, FinitePoset::Index>, ElementId> index;
  std::vector<std::string> labels;
  for (ElementId i = 0; i < pairs.size(); ++i) {
    index[pairs[i]] = i;
    labels.push_back(p.label(pairs[i].first) + "<" + p.label(pairs[i].second));
  }
  // compose[i * k + j] = id of (a, c) when pair i = (a, b) and pair j = (b, c).
  const auto k = pairs.size();
  std::vector<std::int64_t> compose(k * k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (pairs[i].second == pairs[j].first) compose[i * k + j] = index.at({pairs[i].first, pairs[j].second});
    }
  }
  return ClosureSystem::intensional(GroundSet(std::move(labels)), [compose, k](ElementSet y) {
    ElementSet out = y;
    bool grew = true;
    while (grew) {
      grew = false;
      const auto ids = out.ids();
      for (auto i : ids) {
        for (auto j : ids) {
          const auto c = compose[i * k + j];
          if (c >= 0 && !out.contains(static_cast<ElementId>(c))) {
            out = out.with(static_cast<ElementId>(c));
            grew = true;
          }
        }
      }
    }
    return out;
  });
}

ClosureSystem downset_system(const FinitePoset& p) {
  if (p.size() == 0) throw InputError("poset must be nonempty");
  std::vector<ElementSet> below(p.size());
  for (FinitePoset::Index a = 0; a < p.size(); ++a) {
    for (FinitePoset::Index b = 0; b < p.size(); ++b) {
      if (p.leq(b, a)) below[a] = below[a].with(b);
    }
  }
  return ClosureSystem::intensional(GroundSet(p.labels()), [below](ElementSet y) {
    ElementSet out;
    for (auto id : y.ids()) out |= below[id];
    return out;
  });
}

}  // namespace convexity
