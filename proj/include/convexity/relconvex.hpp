#pragma once

#include <string>
#include <vector>

#include "convexity/closure.hpp"
#include "convexity/rational.hpp"
#include "convexity/verdict.hpp"

namespace convexity {

using Point = std::vector<Rational>;

/// Labelled, pairwise distinct points with exact coordinates in dimension dim.
class PointConfig {
 public:
  /// Throws InputError on dimension mismatch, duplicate labels or repeated points.
  PointConfig(std::size_t dim, std::vector<Point> points, std::vector<std::string> labels);
  /// Labels default to "p0", "p1", ...
  PointConfig(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_.at(i); }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sub-configuration on the listed ids, in increasing id order.
  PointConfig subset(ElementSet ids) const;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
  std::vector<std::string> labels_;
};

/// Exact test of p ∈ conv(points) (phase-one simplex over the rationals with
/// Bland's rule).
bool in_convex_hull(const std::vector<Point>& points, const Point& p);

/// Whether point p of the configuration is a convex combination of the points in y.
bool hull_membership(const PointConfig& config, ElementSet y, ElementId p);

/// Closure Y -> {x : x ∈ conv(Y)}; throws CapacityError above the enumeration bound.
ClosureSystem relconvex_system(const PointConfig& config);

/// Y is convexly independent: no y ∈ Y lies in conv(Y∖{y}).
bool is_convexly_independent(const PointConfig& config, ElementSet y);

struct IndependenceResult {
  std::size_t size = 0;
  ElementSet witness;
};

/// Maximum convexly independent subset (at most 16 points).
IndependenceResult max_convexly_independent(const PointConfig& config);

/// Geometric line {base + t·direction}. Canonical: the direction is a primitive
/// integer vector whose first nonzero coordinate is positive, and the base
/// point has a zero at that coordinate.
struct Line {
  Point base;
  Point direction;
  friend bool operator==(const Line&, const Line&) = default;
};

/// Canonical line through two distinct points.
Line line_through(const Point& p, const Point& q);
/// A canonical line through p along the first coordinate axis; stands in for
/// an isolated point in a cover.
Line line_through_point(const Point& p);
bool on_line(const Line& line, const Point& p);

struct CoveringLine {
  Line line;
  ElementSet points;
};

struct LineCover {
  std::size_t count = 0;
  std::vector<CoveringLine> lines;
};

/// Minimum number of lines covering every point (at most 16 points).
LineCover min_line_cover(const PointConfig& config);

/// Planar only. Every 5-subset with no three collinear points contains a
/// convexly independent 4-subset. Witness: the failing 5-set.
Verdict check_es5(const PointConfig& config);

struct SandwichReport {
  IndependenceResult independence;
  LineCover cover;
  /// ind <= 2 · line.
  Verdict verdict;
};

SandwichReport dimension_sandwich_report(const PointConfig& config);

}  // namespace convexity
