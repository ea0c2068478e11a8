#include <doctest.h>

#include <numeric>
#include <random>

#include "convexity/closed_set_lattice.hpp"
#include "convexity/errors.hpp"
#include "convexity/geometry_verify.hpp"
#include "convexity/orders_gen.hpp"
#include "convexity/relconvex.hpp"
#include "support/oracles.hpp"

using namespace convexity;
using nlohmann::json;

namespace {

ClosureSystem from_family(std::vector<std::string> labels, std::vector<ElementSet> family) {
  return ClosureSystem::extensional(GroundSet(std::move(labels)), std::move(family));
}

ClosureSystem all_subsets(std::size_t n) {
  return ClosureSystem::intensional(GroundSet(n), [](ElementSet y) { return y; });
}

ClosureSystem three_atoms() {
  return from_family({"a", "b", "c"}, {ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{2}, ElementSet{0, 1, 2}});
}

Lattice lattice_of(const ClosureSystem& s) { return enumerate_closed_sets(s).lattice(); }

PointConfig points(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> pts;
  for (auto [x, y] : xy) pts.push_back({Rational(x), Rational(y)});
  return PointConfig(2, std::move(pts));
}

FinitePoset fence3() { return FinitePoset::from_relations({"a", "b", "c"}, {{0, 1}, {2, 1}}); }

}  // namespace

TEST_CASE("check_zero_closed") {
  CHECK(check_zero_closed(interval_system(3)).holds());
  const auto v = check_zero_closed(from_family({"0", "1"}, {ElementSet{0}, ElementSet{0, 1}}));
  CHECK_FALSE(v.holds());
  CHECK(v.witness().at("close_of_empty") == json::array({"0"}));
  CHECK(check_zero_closed(antimatroid_from_distributive(Lattice::boolean(4))).holds());
}

TEST_CASE("check_anti_exchange") {
  CHECK(check_anti_exchange(interval_system(3)).holds());
  const auto v = check_anti_exchange(three_atoms());
  REQUIRE_FALSE(v.holds());
  CHECK(v.witness() == json{{"A", {"a"}}, {"x", "b"}, {"y", "c"}});
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> coord(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 6; ++i) {
      Point p{Rational(coord(rng)), Rational(coord(rng))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    CHECK(check_anti_exchange(relconvex_system(PointConfig(2, pts))).holds());
  }
}

TEST_CASE("is_convex_geometry examples") {
  CHECK(is_convex_geometry(subsemilattice_system(FinitePoset::chain(2))).holds());
  CHECK_FALSE(is_convex_geometry(three_atoms()).holds());
  CHECK(is_convex_geometry(suborder_system(FinitePoset::chain(2))).holds());
}

TEST_CASE("library predicates agree with definition-level oracles on all families of <= 4 points") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& family : oracle::all_moore_families(n, false)) {
      const auto s = ClosureSystem::extensional(GroundSet(n), family);
      CHECK(is_convex_geometry(s).holds() == oracle::is_convex_geometry(family, n));
      CHECK(check_convexity_characterization(lattice_of(s)).holds() == oracle::is_convexity_lattice(family));
    }
  }
}

TEST_CASE("characterization matches convex geometry on standard systems") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const auto family = oracle::random_moore_family(n, rng);
    if (!oracle::is_standard(family, n)) continue;
    const auto s = ClosureSystem::extensional(GroundSet(n), family);
    CHECK(is_convex_geometry(s).holds() == check_convexity_characterization(lattice_of(s)).holds());
  }
}

TEST_CASE("check_cover_structure") {
  CHECK(check_cover_structure(enumerate_closed_sets(interval_system(3))).holds());
  CHECK(check_cover_structure(enumerate_closed_sets(relconvex_system(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}})))).holds());
  CHECK(check_cover_structure(enumerate_closed_sets(all_subsets(3))).holds());
  // Holds for every convex geometry on <= 4 points.
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& family : oracle::all_moore_families(n, true)) {
      const auto s = ClosureSystem::extensional(GroundSet(n), family);
      if (is_convex_geometry(s).holds()) CHECK(check_cover_structure(enumerate_closed_sets(s)).holds());
    }
  }
}

TEST_CASE("spatial_support_reduction") {
  SUBCASE("all singleton closures irreducible: identity") {
    const auto r = spatial_support_reduction(interval_system(3));
    CHECK(r.support == ElementSet{0, 1, 2});
    CHECK(closed_sets(r.reduced) == closed_sets(interval_system(3)));
  }
  SUBCASE("collinear points") {
    const auto r = spatial_support_reduction(relconvex_system(points({{0, 0}, {1, 0}, {2, 0}})));
    CHECK(r.support == ElementSet{0, 1, 2});
  }
  SUBCASE("correspondence is an order isomorphism on every convex geometry of <= 4 points") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& family : oracle::all_moore_families(n, true)) {
        const auto s = ClosureSystem::extensional(GroundSet(n), family);
        if (!is_convex_geometry(s).holds()) continue;
        const auto r = spatial_support_reduction(s);
        const auto reduced = closed_sets(r.reduced);
        REQUIRE(r.correspondence.size() == family.size());
        CHECK(r.correspondence.size() == reduced.size());
        for (const auto& [a, ra] : r.correspondence) {
          CHECK(std::find(reduced.begin(), reduced.end(), ra) != reduced.end());
          for (const auto& [b, rb] : r.correspondence) CHECK(a.subset_of(b) == ra.subset_of(rb));
        }
      }
    }
  }
}

TEST_CASE("check_convexity_characterization examples") {
  CHECK(check_convexity_characterization(lattice_of(interval_system(3))).holds());
  const auto v = check_convexity_characterization(Lattice::m3());
  REQUIRE_FALSE(v.holds());
  CHECK(v.witness() == json{{"y", "a"}, {"u", "b"}, {"v", "c"}});
  CHECK(check_convexity_characterization(Lattice::boolean(3)).holds());
}

TEST_CASE("convex_geometry_from_lattice") {
  const auto b2 = convex_geometry_from_lattice(Lattice::boolean(2));
  CHECK(b2.size() == 2);
  CHECK(closed_sets(b2).size() == 4);
  const auto c3 = convex_geometry_from_lattice(Lattice::chain(3));
  CHECK(closed_sets(c3) == closed_sets(initial_system(2)));
  const auto intervals = lattice_of(interval_system(3));
  CHECK(find_isomorphism(lattice_of(convex_geometry_from_lattice(intervals)), intervals).has_value());
}

TEST_CASE("convex_geometry_from_lattice round-trips every characterized corpus lattice") {
  std::size_t checked = 0;
  for (const auto& l : oracle::lattice_corpus(12)) {
    if (l.size() < 2 || !check_convexity_characterization(l).holds()) continue;
    ++checked;
    const auto g = convex_geometry_from_lattice(l);
    CHECK(is_convex_geometry(g).holds());
    CHECK(find_isomorphism(lattice_of(g), l).has_value());
  }
  CHECK(checked > 50);
  CHECK_THROWS_AS(convex_geometry_from_lattice(Lattice::chain(1)), InputError);
}

TEST_CASE("super solvability") {
  const auto i3 = interval_system(3);
  const std::vector<ElementId> endpoints_first{0, 2, 1};
  CHECK(check_super_solvable(i3, endpoints_first).holds());
  const std::vector<ElementId> natural{0, 1, 2};
  const auto v = check_super_solvable(i3, natural);
  REQUIRE_FALSE(v.holds());
  CHECK(v.witness().at("a") == "1");
  const std::vector<ElementId> any{2, 0, 1};
  CHECK(check_super_solvable(all_subsets(3), any).holds());
  const auto found = find_super_solvable_order(i3);
  REQUIRE(found.has_value());
  CHECK(check_super_solvable(i3, *found).holds());
  CHECK(find_super_solvable_order(all_subsets(3)) == std::optional<std::vector<ElementId>>({0, 1, 2}));
  const auto v_poset = FinitePoset::from_relations({"0", "a", "b"}, {{0, 1}, {0, 2}});
  CHECK(find_super_solvable_order(subsemilattice_system(v_poset)).has_value());
  CHECK_THROWS_AS(find_super_solvable_order(all_subsets(11)), CapacityError);
}

TEST_CASE("super solvable search agrees with exhaustive permutation check") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto family = oracle::random_moore_family(n, rng);
    const auto s = ClosureSystem::extensional(GroundSet(n), family);
    if (!is_convex_geometry(s).holds()) continue;
    std::vector<ElementId> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    std::optional<std::vector<ElementId>> first;
    do {
      // Definition: for closed A ⊄ B, A minus the least element of A∖B is closed.
      bool ok = true;
      for (auto a : family) {
        for (auto b : family) {
          if (a.subset_of(b)) continue;
          for (auto e : perm) {
            if (a.contains(e) && !b.contains(e)) {
              ok = ok && s.is_closed(a.without(e));
              break;
            }
          }
        }
      }
      if (ok) {
        first = perm;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(find_super_solvable_order(s) == first);
  }
}

TEST_CASE("distributive and modular") {
  CHECK(is_distributive(Lattice::boolean(3)).holds());
  CHECK(is_modular(Lattice::boolean(3)).holds());
  CHECK(is_modular(Lattice::m3()).holds());
  const auto d = is_distributive(Lattice::m3());
  CHECK_FALSE(d.holds());
  CHECK_FALSE(is_distributive(Lattice::n5()).holds());
  CHECK_FALSE(is_modular(Lattice::n5()).holds());
}

TEST_CASE("antimatroid_from_distributive") {
  SUBCASE("Boolean 2: all subsets on the two coatoms") {
    const auto s = antimatroid_from_distributive(Lattice::boolean(2));
    CHECK(s.size() == 2);
    CHECK(closed_sets(s).size() == 4);
    CHECK(find_anti_isomorphism(lattice_of(s), Lattice::boolean(2)).has_value());
  }
  SUBCASE("4-chain: final segments of its 3 meet-irreducibles") {
    const auto s = antimatroid_from_distributive(Lattice::chain(4));
    CHECK(s.size() == 3);
    CHECK(closed_sets(s) == closed_sets(final_system(3)));
  }
  SUBCASE("fence") {
    const auto l = lattice_of(downset_system(fence3()));
    const auto s = antimatroid_from_distributive(l);
    CHECK(check_anti_exchange(s).holds());
    CHECK(check_zero_closed(s).holds());
    CHECK(find_anti_isomorphism(lattice_of(s), l).has_value());
  }
  SUBCASE("rejects non-distributive input") { CHECK_THROWS_AS(antimatroid_from_distributive(Lattice::n5()), InputError); }
}

TEST_CASE("join of convex geometries is a convex geometry") {
  std::mt19937_64 rng(9);
  std::size_t checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto a = ClosureSystem::extensional(GroundSet(n), oracle::random_moore_family(n, rng));
    const auto b = ClosureSystem::extensional(GroundSet(n), oracle::random_moore_family(n, rng));
    if (!is_convex_geometry(a).holds() || !is_convex_geometry(b).holds()) continue;
    ++checked;
    std::vector<ClosureSystem> pair{a, b};
    CHECK(is_convex_geometry(join_of_systems(pair)).holds());
  }
  CHECK(checked > 10);
}
