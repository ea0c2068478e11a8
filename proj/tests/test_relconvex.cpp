#include <doctest.h>

#include <random>

#include "convexity/closed_set_lattice.hpp"
#include "convexity/errors.hpp"
#include "convexity/geometry_verify.hpp"
#include "convexity/orders_gen.hpp"
#include "convexity/relconvex.hpp"
#include "support/oracles.hpp"

using namespace convexity;

namespace {

Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

PointConfig points(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> pts;
  for (auto [x, y] : xy) pts.push_back(pt(x, y));
  return PointConfig(2, std::move(pts));
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  return ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).is_zero();
}

std::vector<Point> random_points(std::size_t n, std::size_t dim, long range, std::mt19937_64& rng, bool general = false) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 4);
  std::vector<Point> pts;
  while (pts.size() < n) {
    Point p;
    for (std::size_t d = 0; d < dim; ++d) p.push_back(Rational(num(rng), den(rng)));
    bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
    if (general) {
      for (std::size_t i = 0; ok && i < pts.size(); ++i) {
        for (std::size_t j = i + 1; ok && j < pts.size(); ++j) ok = !collinear(pts[i], pts[j], p);
      }
    }
    if (ok) pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("-2").to_string() == "-2/1");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("point configurations validate input") {
  CHECK_THROWS_AS(PointConfig(2, {pt(0, 0), pt(0, 0)}), InputError);
  CHECK_THROWS_AS(PointConfig(2, {pt(0, 0), Point{Rational(1)}}), InputError);
  CHECK_THROWS_AS(PointConfig(1, {Point{Rational(0)}, Point{Rational(1)}}, {"a", "a"}), InputError);
  CHECK(points({{0, 0}, {1, 1}}).labels() == std::vector<std::string>{"p0", "p1"});
}

TEST_CASE("hull membership examples") {
  const auto square = points({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {3, 0}});
  CHECK(hull_membership(square, ElementSet{0, 1, 2, 3}, 4));
  CHECK_FALSE(hull_membership(square, ElementSet{0, 1}, 5));
  const auto tri = points({{0, 0}, {3, 0}, {0, 3}, {1, 0}});
  CHECK(hull_membership(tri, ElementSet{0, 1, 2}, 3));
  CHECK(in_convex_hull({pt(0, 0), pt(3, 0), pt(0, 3)}, pt(1, 0)));
  CHECK(in_convex_hull({pt(0, 0), pt(2, 0)}, pt(Rational(1, 3), 0)));
  CHECK_FALSE(in_convex_hull({}, pt(0, 0)));
}

TEST_CASE("hull membership agrees with the Carathéodory oracle") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const auto pts = random_points(2 + trial % 6, dim, 3, rng);
    const auto probe = random_points(1, dim, 3, rng).front();
    CHECK(in_convex_hull(pts, probe) == oracle::in_hull(pts, probe));
    // Points of the set itself and their midpoints are inside.
    CHECK(in_convex_hull(pts, pts.front()));
    Point mid;
    for (std::size_t d = 0; d < dim; ++d) mid.push_back((pts[0][d] + pts[1][d]) / Rational(2));
    CHECK(in_convex_hull(pts, mid));
  }
}

TEST_CASE("relconvex_system examples") {
  CHECK(closed_sets(relconvex_system(points({{0, 0}, {1, 0}, {2, 0}}))) == closed_sets(interval_system(3)));
  CHECK(closed_sets(relconvex_system(points({{0, 0}, {1, 0}, {0, 1}}))).size() == 8);
  CHECK(closed_sets(relconvex_system(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))).size() == 16);
  // Square plus center: 9 center-free sets avoid both diagonals, and all 16
  // sets with the center are closed.
  CHECK(closed_sets(relconvex_system(points({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}))).size() == 25);
}

TEST_CASE("relconvex systems are convex geometries") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto config = PointConfig(2, random_points(1 + trial % 8, 2, 4, rng));
    CHECK(is_convex_geometry(relconvex_system(config)).holds());
  }
}

TEST_CASE("independence transfers to restrictions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto config = PointConfig(2, random_points(n, 2, 3, rng));
    const auto system = relconvex_system(config);
    const ElementSet x_prime(std::uniform_int_distribution<std::uint64_t>(1, (1ULL << n) - 1)(rng));
    const auto restricted = restrict(system, x_prime);
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      const ElementSet y(m);
      if (!y.subset_of(x_prime)) continue;
      const auto ry = project_to_restriction(x_prime, y);
      bool in_full = true, in_restricted = true;
      for (auto e : y.ids()) in_full = in_full && !system.close(y.without(e)).contains(e);
      for (auto e : ry.ids()) in_restricted = in_restricted && !restricted.close(ry.without(e)).contains(e);
      CHECK(in_full == in_restricted);
      CHECK(in_full == is_convexly_independent(config, y));
    }
  }
}

TEST_CASE("max_convexly_independent examples") {
  CHECK(max_convexly_independent(points({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}})).size == 5);
  CHECK(max_convexly_independent(points({{0, 0}, {1, 0}, {2, 0}})).size == 2);
  const auto two_lines = points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}});
  const auto r = max_convexly_independent(two_lines);
  CHECK(r.size == 4);
  CHECK(is_convexly_independent(two_lines, r.witness));
  // Exhaustive oracle over all subsets.
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < 256; ++m) {
    if (is_convexly_independent(two_lines, ElementSet(m))) best = std::max(best, ElementSet(m).size());
  }
  CHECK(best == 4);
}

TEST_CASE("lines") {
  const auto l = line_through(pt(0, 0), pt(2, 2));
  CHECK(l == line_through(pt(1, 1), pt(3, 3)));
  CHECK(on_line(l, pt(-5, -5)));
  CHECK_FALSE(on_line(l, pt(1, 0)));
  CHECK_THROWS_AS(line_through(pt(1, 1), pt(1, 1)), InputError);
  CHECK(on_line(line_through_point(pt(3, 4)), pt(3, 4)));
}

TEST_CASE("min_line_cover examples") {
  CHECK(min_line_cover(points({{0, 0}, {1, 1}, {2, 2}, {5, 5}})).count == 1);
  CHECK(min_line_cover(points({{0, 0}, {1, 0}, {0, 1}})).count == 2);
  const auto two_lines = points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}});
  const auto cover = min_line_cover(two_lines);
  CHECK(cover.count == 2);
  ElementSet covered;
  for (const auto& line : cover.lines) {
    covered = covered | line.points;
    for (auto id : line.points.ids()) CHECK(on_line(line.line, two_lines.point(id)));
  }
  CHECK(covered == ElementSet::full(8));
  CHECK(min_line_cover(points({{7, 7}})).count == 1);
}

TEST_CASE("check_es5") {
  CHECK(check_es5(points({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}})).holds());
  CHECK(check_es5(points({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}})).holds());
  std::mt19937_64 rng(4);
  CHECK(check_es5(PointConfig(2, random_points(30, 2, 40, rng, true))).holds());
  CHECK_THROWS_AS(check_es5(PointConfig(3, {{0, 0, 0}, {1, 0, 0}})), InputError);
}

TEST_CASE("dimension sandwich") {
  const auto three = dimension_sandwich_report(points({{0, 0}, {1, 1}, {2, 2}}));
  CHECK(three.independence.size == 2);
  CHECK(three.cover.count == 1);
  CHECK(three.verdict.holds());
  const auto four = dimension_sandwich_report(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(four.independence.size == 4);
  CHECK(four.cover.count == 2);
  CHECK(four.verdict.holds());
  const auto nine = dimension_sandwich_report(
      points({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {0, 3}, {3, 1}, {4, 2}, {5, 3}}));
  CHECK(nine.independence.size <= 6);
  CHECK(nine.cover.count == 3);
  CHECK(nine.verdict.holds());
}

TEST_CASE("adding a point raises ind and line by at most one") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto pts = random_points(2 + trial % 7, 2, 3, rng);
    const auto before = dimension_sandwich_report(PointConfig(2, pts));
    Point extra;
    do {
      extra = random_points(1, 2, 3, rng).front();
    } while (std::find(pts.begin(), pts.end(), extra) != pts.end());
    pts.push_back(extra);
    const auto after = dimension_sandwich_report(PointConfig(2, pts));
    CHECK(after.independence.size <= before.independence.size + 1);
    CHECK(after.cover.count <= before.cover.count + 1);
    CHECK(after.independence.size >= before.independence.size);
    CHECK(after.cover.count >= before.cover.count);
    CHECK(after.verdict.holds());
  }
}
