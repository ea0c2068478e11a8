#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "convexity/closed_set_lattice.hpp"
#include "convexity/errors.hpp"
#include "convexity/geometry_verify.hpp"
#include "convexity/orders_gen.hpp"
#include "support/oracles.hpp"

using namespace convexity;

namespace {

std::vector<ElementSet> brute_downsets(const Multichain& m, std::size_t k) {
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (1ULL << m.size()); ++mask) {
    const ElementSet s(mask);
    bool down = true;
    for (auto a : s.ids()) {
      for (ElementId b = 0; b < m.size(); ++b) {
        if (m.less_in(k, b, a) && !s.contains(b)) down = false;
      }
    }
    if (down) out.push_back(s);
  }
  return out;
}

bool join_isomorphic_via(const JoinSemilattice& a, const JoinSemilattice& b, const std::vector<std::uint32_t>& f) {
  if (a.size() != b.size() || std::set<std::uint32_t>(f.begin(), f.end()).size() != a.size()) return false;
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    for (std::uint32_t y = 0; y < a.size(); ++y) {
      if (f[a.join(x, y)] != b.join(f[x], f[y])) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0U);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

}  // namespace

TEST_CASE("chain segment systems") {
  CHECK(closed_sets(interval_system(3)).size() == 7);
  CHECK(find_isomorphism(enumerate_closed_sets(initial_system(3)).lattice(), Lattice::chain(4)).has_value());
  CHECK(closed_sets(final_system(1)) == std::vector<ElementSet>{ElementSet{}, ElementSet{0}});
  CHECK(closed_sets(interval_system(6)).size() == 22);
}

TEST_CASE("interval factorization") {
  const IntervalFactorization f2(2);
  CHECK(f2.embed(ElementSet{0, 1}) == std::pair{ElementSet{0, 1}, ElementSet{0, 1}});
  const IntervalFactorization f3(3);
  CHECK(f3.embed(ElementSet{1}) == std::pair{ElementSet{0, 1}, ElementSet{1, 2}});
  CHECK(f3.meet(ElementSet{0, 1}, ElementSet{1, 2}) == ElementSet{1});
  CHECK_THROWS_AS(f3.embed(ElementSet{0, 2}), InputError);
  CHECK_THROWS_AS(f3.embed(ElementSet{}), InputError);
  CHECK_THROWS_AS(f3.meet(ElementSet{1}, ElementSet{2}), InputError);
}

TEST_CASE("multichain systems") {
  const std::vector<std::uint32_t> id3{0, 1, 2}, rev3{2, 1, 0};
  CHECK(closed_sets(multichain_system(bichain_from_permutation(id3))) == closed_sets(initial_system(3)));
  CHECK(closed_sets(multichain_system(bichain_from_permutation(rev3))) == closed_sets(interval_system(3)));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<std::vector<std::uint32_t>> ranks;
    for (int k = 0; k < 3; ++k) ranks.push_back(random_permutation(n, rng));
    const Multichain m(GroundSet(n), ranks);
    // Oracle: all intersections of one down-set per order.
    std::set<ElementSet> expected;
    for (auto a : brute_downsets(m, 0)) {
      for (auto b : brute_downsets(m, 1)) {
        for (auto c : brute_downsets(m, 2)) expected.insert(a & b & c);
      }
    }
    const auto system = multichain_system(m);
    CHECK(closed_sets(system) == std::vector<ElementSet>(expected.begin(), expected.end()));
    CHECK(is_convex_geometry(system).holds());
  }
  CHECK_THROWS_AS(Multichain(GroundSet(2), {{0, 0}}), InputError);
  CHECK_THROWS_AS(Multichain(GroundSet(2), {}), InputError);
}

TEST_CASE("join of initial-segment systems is the product of their lattices") {
  // Two orders: the closed-set lattice embeds into the product of the two
  // down-set chains via A -> (close_1(A), close_2(A)).
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto b = bichain_from_permutation(random_permutation(n, rng));
    const auto joined = closed_sets(multichain_system(b));
    const auto d1 = brute_downsets(b, 0);
    const auto d2 = brute_downsets(b, 1);
    std::set<ElementSet> meets;
    for (auto a : d1) {
      for (auto c : d2) meets.insert(a & c);
    }
    CHECK(joined == std::vector<ElementSet>(meets.begin(), meets.end()));
  }
}

TEST_CASE("bichain_from_permutation") {
  const auto id = bichain_from_permutation({0, 1, 2});
  CHECK(id.ranks(0) == id.ranks(1));
  const auto rev = bichain_from_permutation({2, 1, 0});
  CHECK(rev.less_in(1, 2, 1));
  CHECK(rev.less_in(1, 1, 0));
  const auto s = bichain_from_permutation({1, 2, 0});
  CHECK(s.less_in(1, 2, 0));
  CHECK(s.less_in(1, 0, 1));
  CHECK_THROWS_AS(bichain_from_permutation({0, 0}), InputError);
}

TEST_CASE("delta semilattice examples") {
  CHECK(delta_semilattice(bichain_from_permutation({2, 1, 0})).size() == 6);
  CHECK(delta_semilattice(bichain_from_permutation({0, 1, 2, 3})).size() == 4);
  CHECK(delta_semilattice(bichain_from_permutation({1, 0})).size() == 3);
  const auto d = delta_semilattice(bichain_from_permutation({2, 1, 0}));
  CHECK(d.validate().holds());
}

TEST_CASE("delta = join-closure of the diagonal on random permutations up to 7") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto b = bichain_from_permutation(random_permutation(6 + trial % 2, rng));
    const auto d = delta_semilattice(b);
    const auto c = diagonal_join_closure(b);
    REQUIRE(d.size() == c.size());
    for (std::uint32_t x = 0; x < d.size(); ++x) {
      CHECK(d.label(x) == c.label(x));
      for (std::uint32_t y = 0; y < d.size(); ++y) CHECK(d.join(x, y) == c.join(x, y));
    }
  }
}

TEST_CASE("relabelling the second chain gives isomorphic delta semilattices") {
  // Renaming ground elements through any bijection f, keeping both orders,
  // leaves Δ unchanged up to isomorphism.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const auto sigma = random_permutation(n, rng);
    const auto f = random_permutation(n, rng);
    const auto b = bichain_from_permutation(sigma);
    std::vector<std::vector<std::uint32_t>> ranks(2, std::vector<std::uint32_t>(n));
    for (std::uint32_t x = 0; x < n; ++x) {
      ranks[0][f[x]] = b.ranks(0)[x];
      ranks[1][f[x]] = b.ranks(1)[x];
    }
    const Multichain relabelled(GroundSet(n), ranks);
    const auto a = delta_semilattice(b);
    const auto c = delta_semilattice(relabelled);
    const auto iso = find_join_isomorphism(a, c);
    REQUIRE(iso.has_value());
    CHECK(join_isomorphic_via(a, c, *iso));
  }
}

TEST_CASE("compact semilattices") {
  CHECK(compact_semilattice_of_geometry(interval_system(3)).size() == 7);
  const auto b = bichain_from_permutation({2, 1, 0});
  const auto compact = compact_semilattice_of_geometry(multichain_system(b));
  const auto hat = delta_with_bottom(b);
  CHECK(hat.label(0) == "⊥");
  const auto iso = find_join_isomorphism(compact, hat);
  REQUIRE(iso.has_value());
  CHECK(join_isomorphic_via(compact, hat, *iso));
  const auto all2 = ClosureSystem::intensional(GroundSet(2), [](ElementSet y) { return y; });
  CHECK(find_join_isomorphism(compact_semilattice_of_geometry(all2), JoinSemilattice::from_lattice(Lattice::boolean(2)))
            .has_value());
}

TEST_CASE("compact semilattice of bichain geometry matches delta with bottom, all bichains of size 6") {
  std::vector<std::uint32_t> sigma(6);
  std::iota(sigma.begin(), sigma.end(), 0U);
  std::size_t failures = 0;
  do {
    const auto b = bichain_from_permutation(sigma);
    const auto compact = compact_semilattice_of_geometry(multichain_system(b));
    const auto hat = delta_with_bottom(b);
    const auto iso = find_join_isomorphism(compact, hat);
    if (!iso || !join_isomorphic_via(compact, hat, *iso)) ++failures;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CHECK(failures == 0);
}

TEST_CASE("omega prefix") {
  CHECK(OmegaPrefix(0).size() == 1);
  CHECK(OmegaPrefix(0).label(0) == "(0,0)");
  const OmegaPrefix one(1);
  CHECK(one.size() == 3);
  CHECK(one.join(0, 1) == 1);
  CHECK(one.join(1, 2) == 2);
  const OmegaPrefix two(2);
  CHECK(two.size() == 7);
  const auto half = two.index_of({1, {1, 1}});
  const auto quarter = two.index_of({2, {1, 2}});
  const auto s = two.semilattice();
  CHECK_FALSE(s.leq(half, quarter));
  CHECK_FALSE(s.leq(quarter, half));
  CHECK(two.label(two.join(half, quarter)) == "(2,1/2)");
  CHECK_THROWS_AS(OmegaPrefix(13), CapacityError);
}

TEST_CASE("omega prefix invariants up to depth 12") {
  for (std::uint32_t depth = 0; depth <= 12; ++depth) {
    const OmegaPrefix p(depth);
    CHECK(p.size() == (std::size_t{2} << depth) - 1);
    for (std::uint32_t level = 0; level <= depth; ++level) {
      // Fiber over each level has 2^level elements with values k/2^level.
      for (std::uint64_t k = 0; k < (1ULL << level); k += std::max<std::uint64_t>(1, (1ULL << level) / 16)) {
        const auto idx = p.index_of({level, {k, level}});
        CHECK(idx == (1U << level) - 1 + k);
        CHECK(p.element(idx).level == level);
        CHECK(p.element(idx).value == Dyadic{k, level});
      }
    }
    if (depth <= 5) {
      for (std::uint32_t a = 0; a < p.size(); ++a) {
        for (std::uint32_t b = 0; b < p.size(); ++b) {
          const auto j = p.element(p.join(a, b));
          const auto ea = p.element(a), eb = p.element(b);
          CHECK(j.level == std::max(ea.level, eb.level));
          CHECK(j.value == std::max(ea.value, eb.value));
        }
      }
    }
  }
}

TEST_CASE("subsemilattice systems") {
  CHECK(closed_sets(subsemilattice_system(FinitePoset::chain(2))).size() == 4);
  const auto v = FinitePoset::from_relations({"0", "a", "b"}, {{0, 1}, {0, 2}});
  CHECK(closed_sets(subsemilattice_system(v)).size() == 7);
  const auto w = FinitePoset::from_relations({"0", "a", "b", "c"}, {{0, 1}, {0, 2}, {0, 3}});
  // Oracle: subsets closed under pairwise meets.
  std::size_t expected = 0;
  for (std::uint64_t m = 0; m < 16; ++m) {
    const ElementSet s(m);
    bool closed = true;
    for (auto a : s.ids()) {
      for (auto b : s.ids()) closed = closed && s.contains(*w.meet(a, b));
    }
    expected += closed ? 1 : 0;
  }
  CHECK(closed_sets(subsemilattice_system(w)).size() == expected);
  const auto no_meet = FinitePoset::from_relations({"a", "b"}, {});
  CHECK_THROWS_AS(subsemilattice_system(no_meet), InputError);
}

TEST_CASE("suborder systems") {
  CHECK(closed_sets(suborder_system(FinitePoset::chain(2))).size() == 2);
  const auto c3 = FinitePoset::chain(3);
  CHECK(strict_pairs(c3).size() == 3);
  CHECK(closed_sets(suborder_system(c3)).size() == 7);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto sum = FinitePoset::direct_sum(std::vector<FinitePoset>(n, FinitePoset::chain(2)));
    const auto l = enumerate_closed_sets(suborder_system(sum));
    CHECK(l.size() == (std::size_t{1} << n));
    CHECK(find_isomorphism(l.lattice(), Lattice::boolean(n)).has_value());
  }
}

TEST_CASE("chains and antichains are independent in subsemilattice systems") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& s : oracle::natural_posets(n)) {
      bool meets = true;
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) meets = meets && s.meet(a, b).has_value();
      }
      if (!meets) continue;
      const auto system = subsemilattice_system(s);
      for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
        const ElementSet y(m);
        bool chain = true, antichain = true;
        for (auto a : y.ids()) {
          for (auto b : y.ids()) {
            if (a != b) (s.comparable(a, b) ? antichain : chain) = false;
          }
        }
        if (!chain && !antichain) continue;
        for (auto a : y.ids()) CHECK_FALSE(system.close(y.without(a)).contains(a));
      }
    }
  }
}

TEST_CASE("downset systems are distributive") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : oracle::natural_posets(n)) CHECK(is_distributive(enumerate_closed_sets(downset_system(p)).lattice()).holds());
  }
}
