#include "fpplab/proximity_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fpplab/predicates.hpp"

namespace fpplab::graphs {

using geom::Point2;

std::size_t ProximityGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency) twice += list.size();
  return twice / 2;
}

bool ProximityGraph::has_edge(int i, int j) const {
  const auto& list = adjacency[static_cast<size_t>(i)];
  return std::binary_search(list.begin(), list.end(), j);
}

std::vector<Edge> ProximityGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (int i = 0; i < num_vertices(); ++i) {
    for (int j : adjacency[static_cast<size_t>(i)]) {
      if (j > i) out.push_back({i, j, edge_length(i, j)});
    }
  }
  return out;
}

namespace {

// Uniform bucket grid for lune emptiness queries.
class PointGrid {
 public:
  explicit PointGrid(const geom::PointSet& ps) : ps_(ps) {
    xmin_ = ps.window.center.x - ps.window.half_width;
    ymin_ = ps.window.center.y - ps.window.half_height;
    double w = 2.0 * ps.window.half_width;
    double h = 2.0 * ps.window.half_height;
    double target = std::sqrt(w * h / std::max(1, ps.size()));
    nx_ = std::max(1, static_cast<int>(w / std::max(target, 1e-12)));
    ny_ = std::max(1, static_cast<int>(h / std::max(target, 1e-12)));
    nx_ = std::min(nx_, 4096);
    ny_ = std::min(ny_, 4096);
    cw_ = w / nx_;
    ch_ = h / ny_;
    cells_.resize(static_cast<size_t>(nx_) * ny_);
    for (int i = 0; i < ps.size(); ++i) {
      cells_[cell_of(ps[i])].push_back(i);
    }
  }

  template <typename Fn>
  void for_each_in_box(double x0, double x1, double y0, double y1, Fn&& fn) const {
    int cx0 = clamp_x(static_cast<int>(std::floor((x0 - xmin_) / cw_)));
    int cx1 = clamp_x(static_cast<int>(std::floor((x1 - xmin_) / cw_)));
    int cy0 = clamp_y(static_cast<int>(std::floor((y0 - ymin_) / ch_)));
    int cy1 = clamp_y(static_cast<int>(std::floor((y1 - ymin_) / ch_)));
    for (int cy = cy0; cy <= cy1; ++cy) {
      for (int cx = cx0; cx <= cx1; ++cx) {
        for (int i : cells_[static_cast<size_t>(cy) * nx_ + cx]) fn(i);
      }
    }
  }

 private:
  size_t cell_of(Point2 p) const {
    int cx = clamp_x(static_cast<int>(std::floor((p.x - xmin_) / cw_)));
    int cy = clamp_y(static_cast<int>(std::floor((p.y - ymin_) / ch_)));
    return static_cast<size_t>(cy) * nx_ + cx;
  }
  int clamp_x(int c) const { return std::clamp(c, 0, nx_ - 1); }
  int clamp_y(int c) const { return std::clamp(c, 0, ny_ - 1); }

  const geom::PointSet& ps_;
  double xmin_, ymin_, cw_, ch_;
  int nx_, ny_;
  std::vector<std::vector<int>> cells_;
};

// Witness making the pair (u, v) a non-edge of the RNG: some z strictly
// closer to both endpoints than they are to each other. Boundary ties are not
// witnesses (the strict inequality follows the graph definition).
bool has_lune_witness(const geom::PointSet& ps, const PointGrid& grid, int u, int v) {
  Point2 pu = ps[u], pv = ps[v];
  double len = geom::dist(pu, pv);
  double x0 = std::max(pu.x, pv.x) - len, x1 = std::min(pu.x, pv.x) + len;
  double y0 = std::max(pu.y, pv.y) - len, y1 = std::min(pu.y, pv.y) + len;
  bool found = false;
  grid.for_each_in_box(x0, x1, y0, y1, [&](int z) {
    if (found || z == u || z == v) return;
    Point2 pz = ps[z];
    if (geom::compare_dist2(pu, pz, pu, pv) < 0 &&
        geom::compare_dist2(pv, pz, pu, pv) < 0) {
      found = true;
    }
  });
  return found;
}

}  // namespace

ProximityGraph rng_from_delaunay(const ProximityGraph& delaunay) {
  if (delaunay.kind != GraphKind::delaunay) {
    throw std::invalid_argument("rng_from_delaunay: input must be a Delaunay graph");
  }
  ProximityGraph g;
  g.kind = GraphKind::rng;
  g.points = delaunay.points;
  g.degenerate = delaunay.degenerate;
  const geom::PointSet& ps = *delaunay.points;
  if (delaunay.degenerate) {
    // Collinear input: consecutive points have empty lunes, all other pairs
    // are witnessed by an in-between point, so the path graph is the RNG.
    g.adjacency = delaunay.adjacency;
    return g;
  }
  PointGrid grid(ps);
  g.adjacency.resize(ps.points.size());
  for (int u = 0; u < delaunay.num_vertices(); ++u) {
    for (int v : delaunay.adjacency[static_cast<size_t>(u)]) {
      if (v <= u) continue;
      if (!has_lune_witness(ps, grid, u, v)) {
        g.adjacency[static_cast<size_t>(u)].push_back(v);
        g.adjacency[static_cast<size_t>(v)].push_back(u);
      }
    }
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  return g;
}

ProximityGraph build_rng(std::shared_ptr<const geom::PointSet> points) {
  return rng_from_delaunay(build_delaunay(std::move(points)));
}

std::vector<Edge> edges_crossing_circle(const ProximityGraph& g, Point2 center,
                                        double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("edges_crossing_circle: radius must be positive");
  }
  std::vector<Edge> out;
  for (int i = 0; i < g.num_vertices(); ++i) {
    for (int j : g.adjacency[static_cast<size_t>(i)]) {
      if (j <= i) continue;
      Point2 a = g.position(i), b = g.position(j);
      double dmin = geom::dist_point_segment(center, a, b);
      double dmax = std::max(geom::dist(a, center), geom::dist(b, center));
      if (dmin <= radius && radius <= dmax) {
        out.push_back({i, j, geom::dist(a, b)});
      }
    }
  }
  return out;
}

int max_degree(const ProximityGraph& g) {
  std::size_t best = 0;
  for (const auto& list : g.adjacency) best = std::max(best, list.size());
  return static_cast<int>(best);
}

}  // namespace fpplab::graphs
