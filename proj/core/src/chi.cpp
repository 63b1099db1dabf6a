#include "fpplab/chi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fpplab/point_set.hpp"

namespace fpplab::experiments {

using geom::Point2;

namespace {

struct EntryComponent {
  int root;      // first vertex beyond r on its tree path
  double angle;  // where the entry edge crosses the radius-r circle
  bool reaches;  // subtree has a vertex beyond r_obs
};

// Angle of the unique crossing of segment a->b with the circle |p| = r,
// given |a| <= r < |b|. The squared distance along the segment is convex,
// so the exit parameter is the larger quadratic root.
double exit_angle(Point2 a, Point2 b, double r) {
  Point2 d = b - a;
  double alpha = geom::norm2(d);
  double beta = geom::dot(a, d);
  double gamma = geom::norm2(a) - r * r;
  double disc = beta * beta - alpha * gamma;
  double t = (-beta + std::sqrt(std::max(disc, 0.0))) / alpha;
  Point2 hit = a + t * d;
  return std::atan2(hit.y, hit.x);
}

std::vector<EntryComponent> entry_components(const fpp::ShortestPathTree& tree,
                                             const geom::PointSet& ps, double r,
                                             double r_obs) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("chi: r must be positive");
  }
  if (!(r < r_obs) || !std::isfinite(r_obs)) {
    throw std::invalid_argument("chi: r must be below the observation radius");
  }
  int n = ps.size();
  std::vector<std::vector<int>> children(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    int p = tree.parent[static_cast<size_t>(v)];
    if (p != -1) children[static_cast<size_t>(p)].push_back(v);
  }
  std::vector<EntryComponent> out;
  std::vector<char> escapes(static_cast<size_t>(n), 0);
  // Pass 1: subtree reach, post-order.
  {
    std::vector<std::pair<int, int>> stack{{tree.root, 0}};
    while (!stack.empty()) {
      auto& [v, cursor] = stack.back();
      if (cursor == 0 && geom::norm(ps[v]) > r_obs) {
        escapes[static_cast<size_t>(v)] = 1;
      }
      if (cursor < static_cast<int>(children[static_cast<size_t>(v)].size())) {
        int c = children[static_cast<size_t>(v)][static_cast<size_t>(cursor++)];
        stack.push_back({c, 0});
      } else {
        if (escapes[static_cast<size_t>(v)] && stack.size() > 1) {
          escapes[static_cast<size_t>(stack[stack.size() - 2].first)] = 1;
        }
        stack.pop_back();
      }
    }
  }
  // Pass 2: first vertices beyond r, pre-order; skip subtrees below them.
  {
    std::vector<int> stack{tree.root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (geom::norm(ps[v]) > r) {
        int p = tree.parent[static_cast<size_t>(v)];
        double angle = p == -1 ? std::atan2(ps[v].y, ps[v].x)
                               : exit_angle(ps[p], ps[v], r);
        out.push_back({v, angle, escapes[static_cast<size_t>(v)] != 0});
        continue;
      }
      for (int c : children[static_cast<size_t>(v)]) stack.push_back(c);
    }
  }
  return out;
}

}  // namespace

int chi_r(const fpp::ShortestPathTree& tree, const graphs::ProximityGraph& g,
          double r, double r_obs) {
  int count = 0;
  for (const auto& comp : entry_components(tree, *g.points, r, r_obs)) {
    if (comp.reaches) ++count;
  }
  return count;
}

int chi_r_directional(const fpp::ShortestPathTree& tree,
                      const graphs::ProximityGraph& g, double r, double r_obs,
                      Point2 u, double c) {
  if (std::abs(geom::norm(u) - 1.0) > 1e-12) {
    throw std::invalid_argument("chi: direction must be a unit vector");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (!(c > 0.0) || !(c <= kTwoPi * r)) {
    throw std::invalid_argument("chi: arc length must lie in (0, 2*pi*r]");
  }
  double theta0 = std::atan2(u.y, u.x);
  double half = c / (2.0 * r);
  int count = 0;
  for (const auto& comp : entry_components(tree, *g.points, r, r_obs)) {
    if (!comp.reaches) continue;
    double delta = std::remainder(comp.angle - theta0, kTwoPi);
    if (delta >= std::numbers::pi) delta -= kTwoPi;
    if (-half <= delta && delta < half) ++count;
  }
  return count;
}

}  // namespace fpplab::experiments
