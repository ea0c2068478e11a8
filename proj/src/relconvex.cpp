#include "convexity/relconvex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "convexity/errors.hpp"

namespace convexity {

PointConfig::PointConfig(std::size_t dim, std::vector<Point> points, std::vector<std::string> labels)
    : dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {
  if (dim_ == 0) throw InputError("point dimension must be at least 1");
  if (points_.empty()) throw InputError("point configuration must be nonempty");
  if (labels_.size() != points_.size()) throw InputError("one label per point required");
  std::set<std::string> seen_labels;
  std::set<std::vector<std::string>> seen_points;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dim_) {
      throw InputError("point '" + labels_[i] + "' has " + std::to_string(points_[i].size()) +
                       " coordinates, expected " + std::to_string(dim_));
    }
    if (!seen_labels.insert(labels_[i]).second) throw InputError("duplicate point label '" + labels_[i] + "'");
    std::vector<std::string> key;
    for (const auto& c : points_[i]) key.push_back(c.to_string());
    if (!seen_points.insert(key).second) throw InputError("repeated point at label '" + labels_[i] + "'");
  }
}

namespace {
std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}
}  // namespace

PointConfig::PointConfig(std::size_t dim, std::vector<Point> points)
    : PointConfig(dim, points, default_labels(points.size())) {}

PointConfig PointConfig::subset(ElementSet ids) const {
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (auto id : ids.ids()) {
    pts.push_back(points_.at(id));
    labels.push_back(labels_.at(id));
  }
  return PointConfig(dim_, std::move(pts), std::move(labels));
}

bool in_convex_hull(const std::vector<Point>& points, const Point& p) {
  if (points.empty()) return false;
  const auto d = p.size();
  for (const auto& q : points) {
    if (q == p) return true;
  }
  for (std::size_t k = 0; k < d; ++k) {
    bool below = false, above = false;
    for (const auto& q : points) {
      below = below || q[k] <= p[k];
      above = above || q[k] >= p[k];
    }
    if (!below || !above) return false;
  }

  // Constraints: Σ λ_j q_j = p (d rows), Σ λ_j = 1, λ >= 0. One artificial per
  // row starts in the basis; phase one minimizes their sum. Artificials that
  // leave are never re-entered, so their columns are omitted.
  const auto m = points.size();
  const auto rows = d + 1;
  const auto width = m + 1;  // λ columns, then right-hand side
  std::vector<Rational> t(rows * width);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return t[r * width + c]; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) at(r, j) = r < d ? points[j][r] : Rational(1);
    at(r, m) = r < d ? p[r] : Rational(1);
    if (at(r, m).sign() < 0) {
      for (std::size_t c = 0; c < width; ++c) at(r, c) = -at(r, c);
    }
  }
  std::vector<Rational> objective(width);
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t r = 0; r < rows; ++r) objective[c] -= at(r, c);
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

  while (true) {
    std::size_t entering = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (objective[j].sign() < 0) {
        entering = j;
        break;
      }
    }
    if (entering == m) break;
    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (at(r, entering).sign() <= 0) continue;
      Rational ratio = at(r, m) / at(r, entering);
      if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == rows) break;  // unbounded direction; cannot occur with artificial objective >= 0
    const Rational pivot = at(leaving, entering);
    for (std::size_t c = 0; c < width; ++c) at(leaving, c) /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || at(r, entering).is_zero()) continue;
      const Rational factor = at(r, entering);
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= factor * at(leaving, c);
    }
    if (!objective[entering].is_zero()) {
      const Rational factor = objective[entering];
      for (std::size_t c = 0; c < width; ++c) objective[c] -= factor * at(leaving, c);
    }
    basis[leaving] = entering;
  }
  return objective[m].is_zero();
}

namespace {

std::vector<Point> points_of(const PointConfig& config, ElementSet y) {
  std::vector<Point> out;
  for (auto id : y.ids()) out.push_back(config.point(id));
  return out;
}

void require_ids(const PointConfig& config, ElementSet y) {
  if (!y.subset_of(ElementSet::full(config.size()))) {
    throw InputError("point subset " + y.to_string() + " leaves the configuration");
  }
}

}  // namespace

bool hull_membership(const PointConfig& config, ElementSet y, ElementId p) {
  require_ids(config, y);
  if (p >= config.size()) throw InputError("point id " + std::to_string(p) + " out of range");
  if (y.contains(p)) return true;
  return in_convex_hull(points_of(config, y), config.point(p));
}

ClosureSystem relconvex_system(const PointConfig& config) {
  require_within_bound(config.size(), enumeration_bound(), "relconvex_system");
  return ClosureSystem::intensional(GroundSet(config.labels()), [config](ElementSet y) {
    if (y.empty()) return y;
    const auto pts = points_of(config, y);
    ElementSet out = y;
    for (ElementId x = 0; x < config.size(); ++x) {
      if (!y.contains(x) && in_convex_hull(pts, config.point(x))) out = out.with(x);
    }
    return out;
  });
}

bool is_convexly_independent(const PointConfig& config, ElementSet y) {
  require_ids(config, y);
  for (auto id : y.ids()) {
    if (hull_membership(config, y.without(id), id)) return false;
  }
  return true;
}

IndependenceResult max_convexly_independent(const PointConfig& config) {
  const auto n = config.size();
  require_within_bound(n, 16, "max_convexly_independent");
  IndependenceResult best;
  // Convex independence is hereditary, so only independent sets are extended.
  auto dfs = [&](auto&& self, ElementSet current, ElementId next) -> void {
    if (current.size() > best.size) best = {current.size(), current};
    for (ElementId e = next; e < n; ++e) {
      if (current.size() + (n - e) <= best.size) return;
      const auto grown = current.with(e);
      if (hull_membership(config, current, e)) continue;
      bool ok = true;
      for (auto s : current.ids()) {
        if (hull_membership(config, grown.without(s), s)) {
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

namespace {

Point subtract(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

// Primitive integer direction with positive leading coordinate.
Point canonical_direction(const Point& v) {
  mpz_class lcm = 1;
  for (const auto& c : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_class scaled = c.raw().get_num() * (lcm / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    ints.push_back(scaled);
  }
  if (g == 0) throw InputError("line direction must be nonzero");
  const auto lead = std::find_if(ints.begin(), ints.end(), [](const mpz_class& z) { return z != 0; });
  if (*lead < 0) g = -g;
  Point out;
  for (const auto& z : ints) out.emplace_back(mpq_class(z / g));
  return out;
}

std::size_t leading_index(const Point& dir) {
  for (std::size_t k = 0; k < dir.size(); ++k) {
    if (!dir[k].is_zero()) return k;
  }
  throw InputError("line direction must be nonzero");
}

Line canonical_line(const Point& p, Point dir) {
  dir = canonical_direction(dir);
  const auto k = leading_index(dir);
  const Rational t = -p[k] / dir[k];
  Point base(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) base[i] = p[i] + t * dir[i];
  return Line{std::move(base), std::move(dir)};
}

}  // namespace

Line line_through(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw InputError("points have different dimensions");
  if (p == q) throw InputError("a line needs two distinct points");
  return canonical_line(p, subtract(q, p));
}

Line line_through_point(const Point& p) {
  Point dir(p.size(), Rational(0));
  dir.at(0) = Rational(1);
  return canonical_line(p, dir);
}

bool on_line(const Line& line, const Point& p) {
  if (p.size() != line.base.size()) return false;
  const auto k = leading_index(line.direction);
  const Rational t = (p[k] - line.base[k]) / line.direction[k];
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != line.base[i] + t * line.direction[i]) return false;
  }
  return true;
}

LineCover min_line_cover(const PointConfig& config) {
  const auto n = config.size();
  require_within_bound(n, 16, "min_line_cover");
  const auto all = ElementSet::full(n);
  if (n == 1) return LineCover{1, {CoveringLine{line_through_point(config.point(0)), all}}};

  std::map<std::uint64_t, Line> candidates;  // point mask -> line
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      auto line = line_through(config.point(i), config.point(j));
      ElementSet on;
      for (ElementId k = 0; k < n; ++k) {
        if (on_line(line, config.point(k))) on = on.with(k);
      }
      candidates.emplace(on.bits(), std::move(line));
    }
  }
  std::vector<std::pair<ElementSet, const Line*>> lines;
  std::size_t longest = 0;
  for (const auto& [bits, line] : candidates) {
    lines.emplace_back(ElementSet(bits), &line);
    longest = std::max(longest, ElementSet(bits).size());
  }
  std::stable_sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

  std::vector<CoveringLine> chosen, best;
  std::size_t best_count = n + 1;
  auto dfs = [&](auto&& self, ElementSet uncovered) -> void {
    if (uncovered.empty()) {
      if (chosen.size() < best_count) {
        best_count = chosen.size();
        best = chosen;
      }
      return;
    }
    const auto lower_bound = (uncovered.size() + longest - 1) / longest;
    if (chosen.size() + lower_bound >= best_count) return;
    const auto p = uncovered.first();
    bool singleton_tried = false;
    for (const auto& [mask, line] : lines) {
      if (!mask.contains(p)) continue;
      const auto gain = mask & uncovered;
      if (gain.size() == 1) {
        // Every remaining line through p covers nothing else still uncovered.
        if (singleton_tried) continue;
        singleton_tried = true;
        chosen.push_back({line_through_point(config.point(p)), ElementSet::singleton(p)});
      } else {
        chosen.push_back({*line, mask});
      }
      self(self, uncovered - gain);
      chosen.pop_back();
    }
  };
  dfs(dfs, all);
  return LineCover{best_count, std::move(best)};
}

namespace {

bool collinear2(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) == (b[1] - a[1]) * (c[0] - a[0]);
}

}  // namespace

Verdict check_es5(const PointConfig& config) {
  if (config.dim() != 2) throw InputError("check_es5 requires planar points (dim 2)");
  const auto n = config.size();
  std::vector<ElementId> pick(5);
  auto has_collinear_triple = [&](const std::vector<ElementId>& ids) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        for (std::size_t c = b + 1; c < ids.size(); ++c) {
          if (collinear2(config.point(ids[a]), config.point(ids[b]), config.point(ids[c]))) return true;
        }
      }
    }
    return false;
  };
  auto check = [&]() -> std::optional<Verdict> {
    if (has_collinear_triple(pick)) return std::nullopt;
    ElementSet five;
    for (auto id : pick) five = five.with(id);
    for (auto drop : pick) {
      if (is_convexly_independent(config, five.without(drop))) return std::nullopt;
    }
    nlohmann::json w = nlohmann::json::array();
    for (auto id : pick) w.push_back(config.labels()[id]);
    return Verdict::fail("5-point set without a convexly independent 4-subset", {{"five_set", w}});
  };
  if (n < 5) return Verdict::pass();
  for (pick[0] = 0; pick[0] < n; ++pick[0])
    for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
      for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
        for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
          for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4])
            if (auto failure = check()) return *failure;
  return Verdict::pass();
}

SandwichReport dimension_sandwich_report(const PointConfig& config) {
  SandwichReport report{max_convexly_independent(config), min_line_cover(config), Verdict::pass()};
  const auto ind = report.independence.size;
  const auto line = report.cover.count;
  if (ind > 2 * line) {
    report.verdict = Verdict::fail("ind > 2·line", {{"ind", ind}, {"line", line}});
  }
  return report;
}

}  // namespace convexity
