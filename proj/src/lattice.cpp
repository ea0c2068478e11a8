#include "convexity/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "convexity/errors.hpp"

namespace convexity {

namespace {

using Index = Lattice::Index;

// Upper covers of every element from the order: b covers a iff no element
// strictly between. Candidates are visited by increasing down-set size, so a
// candidate is a cover iff no previously found cover lies below it.
std::vector<std::vector<Index>> compute_upper_covers(std::size_t n, const auto& leq) {
  std::vector<std::size_t> height(n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (leq(b, a)) ++height[a];
    }
  }
  std::vector<Index> by_height(n);
  std::iota(by_height.begin(), by_height.end(), 0);
  std::stable_sort(by_height.begin(), by_height.end(), [&](Index x, Index y) { return height[x] < height[y]; });
  std::vector<std::vector<Index>> upper(n);
  for (Index a = 0; a < n; ++a) {
    for (auto b : by_height) {
      if (b == a || !leq(a, b)) continue;
      bool cover = std::none_of(upper[a].begin(), upper[a].end(), [&](Index c) { return leq(c, b); });
      if (cover) upper[a].push_back(b);
    }
    std::sort(upper[a].begin(), upper[a].end());
  }
  return upper;
}

}  // namespace

Lattice::Lattice(std::vector<std::string> labels, std::vector<Index> join, std::vector<Index> meet)
    : labels_(std::move(labels)), join_(std::move(join)), meet_(std::move(meet)) {
  const auto n = size();
  if (n == 0) throw InputError("lattice must be nonempty");
  for (Index a = 0; a < n; ++a) {
    bottom_ = this->meet(bottom_, a);
    top_ = this->join(top_, a);
  }
  upper_ = compute_upper_covers(n, [this](Index a, Index b) { return leq(a, b); });
  lower_.assign(n, {});
  for (Index a = 0; a < n; ++a) {
    for (auto b : upper_[a]) lower_[b].push_back(a);
  }
}

Lattice Lattice::from_poset(const FinitePoset& order) {
  const auto n = order.size();
  if (n == 0) throw InputError("lattice must be nonempty");
  std::vector<Index> join(n * n), meet(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      auto j = order.join(a, b);
      auto m = order.meet(a, b);
      if (!j) throw InputError("not a lattice: '" + order.label(a) + "' and '" + order.label(b) + "' have no join");
      if (!m) throw InputError("not a lattice: '" + order.label(a) + "' and '" + order.label(b) + "' have no meet");
      join[a * n + b] = join[b * n + a] = *j;
      meet[a * n + b] = meet[b * n + a] = *m;
    }
  }
  return Lattice(order.labels(), std::move(join), std::move(meet));
}

Lattice Lattice::from_tables(std::vector<std::string> labels, std::vector<Index> join, std::vector<Index> meet,
                             bool validate) {
  const auto n = labels.size();
  if (join.size() != n * n || meet.size() != n * n) throw InputError("lattice tables have wrong shape");
  if (!validate) return Lattice(std::move(labels), std::move(join), std::move(meet));
  auto j = [&](Index a, Index b) { return join[a * n + b]; };
  auto m = [&](Index a, Index b) { return meet[a * n + b]; };
  for (Index a = 0; a < n; ++a) {
    if (j(a, a) != a || m(a, a) != a) throw InputError("lattice tables are not idempotent at " + labels[a]);
    for (Index b = 0; b < n; ++b) {
      if (j(a, b) >= n || m(a, b) >= n) throw InputError("lattice table entry out of range");
      if (j(a, b) != j(b, a) || m(a, b) != m(b, a)) throw InputError("lattice tables are not commutative");
      if (j(a, m(a, b)) != a || m(a, j(a, b)) != a) throw InputError("lattice tables violate absorption");
      if ((j(a, b) == b) != (m(a, b) == a)) throw InputError("join and meet induce different orders");
      for (Index c = 0; c < n; ++c) {
        if (j(j(a, b), c) != j(a, j(b, c)) || m(m(a, b), c) != m(a, m(b, c))) {
          throw InputError("lattice tables are not associative");
        }
      }
    }
  }
  return Lattice(std::move(labels), std::move(join), std::move(meet));
}

Lattice Lattice::chain(std::size_t n) { return from_poset(FinitePoset::chain(n)); }

Lattice Lattice::boolean(std::size_t atoms) {
  if (atoms > 12) throw CapacityError("boolean lattice: atom count " + std::to_string(atoms) + " exceeds bound 12");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::string> labels;
  std::vector<Index> join(n * n), meet(n * n);
  for (Index a = 0; a < n; ++a) {
    std::string l = "{";
    for (std::size_t i = 0; i < atoms; ++i) {
      if ((a >> i) & 1U) l += (l.size() > 1 ? "," : "") + std::to_string(i);
    }
    labels.push_back(l + "}");
    for (Index b = 0; b < n; ++b) {
      join[a * n + b] = a | b;
      meet[a * n + b] = a & b;
    }
  }
  return Lattice(std::move(labels), std::move(join), std::move(meet));
}

Lattice Lattice::m3() {
  return from_poset(FinitePoset::from_relations({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

Lattice Lattice::n5() {
  return from_poset(FinitePoset::from_relations({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
}

bool Lattice::covers(Index lower, Index upper) const {
  const auto& u = upper_.at(lower);
  return std::binary_search(u.begin(), u.end(), upper);
}

std::vector<Lattice::Index> Lattice::join_irreducibles() const {
  std::vector<Index> out;
  for (Index a = 0; a < size(); ++a) {
    if (lower_[a].size() == 1) out.push_back(a);
  }
  return out;
}

std::vector<Lattice::Index> Lattice::meet_irreducibles() const {
  std::vector<Index> out;
  for (Index a = 0; a < size(); ++a) {
    if (upper_[a].size() == 1) out.push_back(a);
  }
  return out;
}

Lattice::Index Lattice::join_all(const std::vector<Index>& xs) const {
  Index acc = bottom_;
  for (auto x : xs) acc = join(acc, x);
  return acc;
}

Lattice::Index Lattice::meet_all(const std::vector<Index>& xs) const {
  Index acc = top_;
  for (auto x : xs) acc = meet(acc, x);
  return acc;
}

Lattice Lattice::dual() const { return Lattice(labels_, meet_, join_); }

FinitePoset Lattice::as_poset() const {
  std::vector<std::pair<Index, Index>> rel;
  for (Index a = 0; a < size(); ++a) {
    for (auto b : upper_[a]) rel.emplace_back(a, b);
  }
  return FinitePoset::from_relations(labels_, rel);
}

namespace {

struct IsoSearch {
  const FinitePoset& a;
  const FinitePoset& b;
  std::vector<std::uint32_t> order;       // elements of a in assignment order
  std::vector<std::uint64_t> sig_a, sig_b;
  std::vector<std::int64_t> image;        // a -> b, -1 unassigned
  std::vector<std::uint8_t> used;

  static std::vector<std::uint64_t> signatures(const FinitePoset& p) {
    const auto n = p.size();
    std::vector<std::uint64_t> below(n, 0), above(n, 0), lower(n, 0), upper(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (p.leq(y, x)) ++below[x];
        if (p.leq(x, y)) ++above[x];
      }
    }
    for (auto [x, y] : p.hasse()) {
      ++upper[x];
      ++lower[y];
    }
    std::vector<std::uint64_t> sig(n);
    for (std::uint32_t x = 0; x < n; ++x) sig[x] = (below[x] << 48) | (above[x] << 32) | (lower[x] << 16) | upper[x];
    return sig;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const auto x = order[depth];
    for (std::uint32_t y = 0; y < b.size(); ++y) {
      if (used[y] || sig_b[y] != sig_a[x]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const auto z = order[k];
        const auto w = static_cast<std::uint32_t>(image[z]);
        ok = a.leq(x, z) == b.leq(y, w) && a.leq(z, x) == b.leq(w, y);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (run(depth + 1)) return true;
      image[x] = -1;
      used[y] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::uint32_t>> find_order_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, b, {}, IsoSearch::signatures(a), IsoSearch::signatures(b),
              std::vector<std::int64_t>(a.size(), -1), std::vector<std::uint8_t>(b.size(), 0)};
  auto sorted_a = s.sig_a, sorted_b = s.sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;
  s.order.resize(a.size());
  std::iota(s.order.begin(), s.order.end(), 0);
  // Linear extension of a: fewer elements below first.
  std::stable_sort(s.order.begin(), s.order.end(), [&](auto x, auto y) { return (s.sig_a[x] >> 48) < (s.sig_a[y] >> 48); });
  if (!s.run(0)) return std::nullopt;
  return std::vector<std::uint32_t>(s.image.begin(), s.image.end());
}

}  // namespace convexity
