#include "fpplab/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fpplab::geom {

namespace {

// Indices of points colliding with an earlier (or equal-index smaller) twin.
std::vector<int> duplicate_indices(const std::vector<Point2>& pts) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
    return a < b;
  });
  std::vector<int> dups;
  for (size_t k = 1; k < order.size(); ++k) {
    if (pts[order[k]] == pts[order[k - 1]]) dups.push_back(order[k]);
  }
  return dups;
}

}  // namespace

namespace {

std::vector<Point2> draw_uniform(const Window& window, std::uint64_t n,
                                 RandomEngine& rng) {
  std::vector<Point2> pts;
  pts.reserve(n);
  auto draw = [&]() -> Point2 {
    double x = window.center.x + window.half_width * (2.0 * rng.uniform01() - 1.0);
    double y = window.center.y + window.half_height * (2.0 * rng.uniform01() - 1.0);
    return {x, y};
  };
  for (std::uint64_t i = 0; i < n; ++i) pts.push_back(draw());
  // Exact collisions have probability ~0 but would break downstream
  // assumptions; redraw the later point of any colliding pair.
  for (;;) {
    auto dups = duplicate_indices(pts);
    if (dups.empty()) break;
    for (int i : dups) pts[static_cast<size_t>(i)] = draw();
  }
  return pts;
}

void check_window(const Window& window, const char* who) {
  if (window.half_width <= 0.0 || window.half_height <= 0.0) {
    throw std::invalid_argument(std::string(who) +
                                ": window half extents must be positive");
  }
}

}  // namespace

PointSet sample_ppp(const Window& window, double intensity, SeedStream stream) {
  if (intensity < 0.0 || !std::isfinite(intensity)) {
    throw std::invalid_argument("sample_ppp: intensity must be finite and >= 0");
  }
  check_window(window, "sample_ppp");
  RandomEngine rng(stream);
  std::uint64_t n = rng.poisson(intensity * window.area());
  return PointSet{draw_uniform(window, n, rng), window, stream};
}

PointSet sample_uniform(const Window& window, int count, SeedStream stream) {
  if (count < 0) {
    throw std::invalid_argument("sample_uniform: count must be >= 0");
  }
  check_window(window, "sample_uniform");
  RandomEngine rng(stream);
  return PointSet{draw_uniform(window, static_cast<std::uint64_t>(count), rng),
                  window, stream};
}

PointSet make_point_set(std::vector<Point2> points, const Window& window) {
  for (size_t i = 0; i < points.size(); ++i) {
    const Point2& p = points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("point " + std::to_string(i) + " is not finite");
    }
    if (!window.contains(p)) {
      throw std::invalid_argument("point " + std::to_string(i) + " lies outside the window");
    }
  }
  if (!duplicate_indices(points).empty()) {
    throw std::invalid_argument("point set contains duplicate positions");
  }
  return PointSet{std::move(points), window, SeedStream{}};
}

int nearest_vertex(const PointSet& ps, Point2 q) {
  if (ps.points.empty()) {
    throw std::invalid_argument("nearest_vertex: empty point set");
  }
  int best = 0;
  double best_d2 = dist2(ps.points[0], q);
  for (int i = 1; i < ps.size(); ++i) {
    double d2 = dist2(ps.points[static_cast<size_t>(i)], q);
    if (d2 < best_d2) {
      best = i;
      best_d2 = d2;
    }
  }
  return best;
}

}  // namespace fpplab::geom
