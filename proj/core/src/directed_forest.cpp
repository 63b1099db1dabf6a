#include "fpplab/directed_forest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fpplab/point_set.hpp"

namespace fpplab::forest {

using geom::Point2;

void validate(const DirectionSpec& d) {
  if (std::abs(geom::norm(d.u) - 1.0) > 1e-12) {
    throw std::invalid_argument("DirectionSpec: direction must be a unit vector");
  }
  if (!(d.target_radius > 0.0) || !std::isfinite(d.target_radius)) {
    throw std::invalid_argument("DirectionSpec: target radius must be positive");
  }
}

namespace {

int target_of(const graphs::ProximityGraph& g, const DirectionSpec& d) {
  return geom::nearest_vertex(*g.points, d.target_radius * d.u);
}

}  // namespace

fpp::GeodesicPath directional_geodesic(const graphs::ProximityGraph& g, int x,
                                       const DirectionSpec& d) {
  validate(d);
  int sink = target_of(g, d);
  auto tree = fpp::shortest_path_tree(g, sink);
  fpp::GeodesicPath p;
  p.source = x;
  p.target = sink;
  if (!tree.reached(x)) return p;
  std::vector<int> seq = tree.path_to(x);
  std::reverse(seq.begin(), seq.end());
  p.vertices = std::move(seq);
  p.length = tree.dist[static_cast<size_t>(x)];
  p.found = true;
  return p;
}

DirectedForest build_directed_forest(const graphs::ProximityGraph& g,
                                     const DirectionSpec& d) {
  validate(d);
  int sink = target_of(g, d);
  auto tree = fpp::shortest_path_tree(g, sink);
  DirectedForest f;
  f.direction = d;
  f.target_vertex = sink;
  f.successor = std::move(tree.parent);
  f.points = g.points;
  return f;
}

CoalescenceReport coalescence_in_tree(const fpp::ShortestPathTree& tree,
                                      const geom::PointSet& ps, int x, int x2,
                                      const DirectionSpec& d) {
  CoalescenceReport r;
  if (!tree.reached(x) || !tree.reached(x2)) return r;
  std::vector<char> on_first(ps.points.size(), 0);
  for (int v = x; v != -1; v = tree.parent[static_cast<size_t>(v)]) {
    on_first[static_cast<size_t>(v)] = 1;
  }
  int merge = x2;
  while (!on_first[static_cast<size_t>(merge)]) {
    merge = tree.parent[static_cast<size_t>(merge)];
  }
  r.found = true;
  r.merge_vertex = merge;
  r.merge_radius = geom::norm(ps[merge]);
  r.genuine = r.merge_radius <= d.target_radius / 2.0;
  return r;
}

CoalescenceReport coalescence(const graphs::ProximityGraph& g, int x, int x2,
                              const DirectionSpec& d) {
  validate(d);
  int sink = target_of(g, d);
  auto tree = fpp::shortest_path_tree(g, sink);
  return coalescence_in_tree(tree, *g.points, x, x2, d);
}

std::optional<double> stability_radius(const std::vector<DirectedForest>& forests,
                                       const std::vector<double>& radii, int x) {
  if (forests.size() != radii.size() || forests.empty()) {
    throw std::invalid_argument("stability_radius: one forest per radius required");
  }
  size_t k = forests.size();
  int last = forests[k - 1].successor[static_cast<size_t>(x)];
  size_t first_stable = k - 1;
  while (first_stable > 0 &&
         forests[first_stable - 1].successor[static_cast<size_t>(x)] == last) {
    --first_stable;
  }
  if (k >= 2 && first_stable == k - 1) return std::nullopt;  // last two disagree
  return radii[first_stable];
}

std::optional<double> first_edge_stability(const graphs::ProximityGraph& g, int x,
                                           Point2 u,
                                           const std::vector<double>& radii) {
  if (radii.empty()) {
    throw std::invalid_argument("first_edge_stability: empty radius list");
  }
  for (size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) {
      throw std::invalid_argument("first_edge_stability: radii must be strictly increasing");
    }
  }
  std::vector<DirectedForest> forests;
  forests.reserve(radii.size());
  for (double r : radii) {
    forests.push_back(build_directed_forest(g, DirectionSpec{u, r}));
  }
  return stability_radius(forests, radii, x);
}

namespace {

struct Frame {
  const geom::PointSet& ps;
  Point2 w;      // axial unit vector (forest direction)
  Point2 t;      // transverse unit vector, rot90(w)
  double s(int v) const { return geom::dot(ps[v], w); }
  double tr(int v) const { return geom::dot(ps[v], t); }
};

// Transverse coordinate where edge (a -> b) crosses the axial level m, or
// nullopt if it does not strictly straddle the line.
std::optional<double> crossing(const Frame& fr, int a, int b, double m) {
  double sa = fr.s(a) - m, sb = fr.s(b) - m;
  if (!(sa * sb < 0.0)) return std::nullopt;
  double lambda = sa / (sa - sb);
  return fr.tr(a) + lambda * (fr.tr(b) - fr.tr(a));
}

enum class Last0 { none, in_segment, out_segment };

}  // namespace

std::vector<HighwayCount> highway_counts(const DirectedForest& forest, double L,
                                         const std::vector<double>& m_values) {
  return highway_counts(forest, L, m_values,
                        forest.points->observation_region());
}

std::vector<HighwayCount> highway_counts(const DirectedForest& forest, double L,
                                         const std::vector<double>& m_values,
                                         const geom::Window& obs) {
  validate(forest.direction);
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw std::invalid_argument("highway_counts: L must be positive");
  }
  if (m_values.empty()) {
    throw std::invalid_argument("highway_counts: empty level list");
  }
  const geom::PointSet& ps = *forest.points;
  int n = ps.size();
  Frame fr{ps, forest.direction.u,
           Point2{-forest.direction.u.y, forest.direction.u.x}};
  for (double m : m_values) {
    if (m < 0.0 || !std::isfinite(m)) {
      throw std::invalid_argument("highway_counts: levels must be >= 0");
    }
  }
  int sink = forest.target_vertex;
  double sink_s = fr.s(sink);
  double max_m = *std::max_element(m_values.begin(), m_values.end());
  if (!(sink_s > max_m)) {
    throw std::invalid_argument("highway_counts: target not beyond the deepest level");
  }
  Point2 seg_far = L * fr.t;
  if (!obs.contains({0.0, 0.0}) || !obs.contains(seg_far)) {
    throw std::invalid_argument("highway_counts: base segment leaves the observation region");
  }

  // Children lists of the in-tree (edges reversed).
  std::vector<std::vector<int>> children(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    int s = forest.successor[static_cast<size_t>(v)];
    if (s != -1) children[static_cast<size_t>(s)].push_back(v);
  }

  // deep[v]: the backward subtree of v reaches outside the observation region.
  std::vector<char> deep(static_cast<size_t>(n), 0);
  // last0[v]: classification of the last base-line crossing on path v->sink.
  std::vector<Last0> last0(static_cast<size_t>(n), Last0::none);
  auto classify = [&](double t_cross) {
    return (t_cross >= 0.0 && t_cross < L) ? Last0::in_segment : Last0::out_segment;
  };
  {
    // Post-order for deep, pre-order for last0, one stack walk from the sink.
    std::vector<std::pair<int, int>> stack;  // (vertex, child cursor)
    stack.push_back({sink, 0});
    last0[static_cast<size_t>(sink)] = Last0::none;
    while (!stack.empty()) {
      auto& [v, cursor] = stack.back();
      if (cursor == 0 && !obs.contains(ps[v])) deep[static_cast<size_t>(v)] = 1;
      if (cursor < static_cast<int>(children[static_cast<size_t>(v)].size())) {
        int c = children[static_cast<size_t>(v)][static_cast<size_t>(cursor++)];
        if (last0[static_cast<size_t>(v)] != Last0::none) {
          last0[static_cast<size_t>(c)] = last0[static_cast<size_t>(v)];
        } else if (auto t = crossing(fr, c, v, 0.0)) {
          last0[static_cast<size_t>(c)] = classify(*t);
        } else {
          last0[static_cast<size_t>(c)] = Last0::none;
        }
        stack.push_back({c, 0});
      } else {
        if (deep[static_cast<size_t>(v)] && stack.size() > 1) {
          int parent = stack[stack.size() - 2].first;
          deep[static_cast<size_t>(parent)] = 1;
        }
        stack.pop_back();
      }
    }
  }

  // Does some backward chain through c have its last base-line crossing in
  // the segment and reach the observation boundary? Only needed when the
  // downstream part of the chain never crosses the base line.
  auto upstream_qualifies = [&](int c) {
    struct Node {
      int v;
      Last0 state;
    };
    std::vector<Node> stack{{c, Last0::none}};
    while (!stack.empty()) {
      Node nd = stack.back();
      stack.pop_back();
      if (nd.state == Last0::in_segment) {
        if (deep[static_cast<size_t>(nd.v)]) return true;
        continue;
      }
      if (nd.state == Last0::out_segment) continue;
      for (int u : children[static_cast<size_t>(nd.v)]) {
        Last0 st = Last0::none;
        if (auto t = crossing(fr, u, nd.v, 0.0)) st = classify(*t);
        stack.push_back({u, st});
      }
    }
    return false;
  };

  std::vector<HighwayCount> out;
  out.reserve(m_values.size());
  std::vector<char> ahead(static_cast<size_t>(n), 0);
  for (double m : m_values) {
    // ahead[v]: path v->sink crosses level m strictly after v.
    std::fill(ahead.begin(), ahead.end(), 0);
    {
      std::vector<int> stack{sink};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : children[static_cast<size_t>(v)]) {
          bool edge_crosses = crossing(fr, c, v, m).has_value();
          ahead[static_cast<size_t>(c)] =
              static_cast<char>(ahead[static_cast<size_t>(v)] || edge_crosses);
          stack.push_back(c);
        }
      }
    }
    int count = 0;
    for (int c = 0; c < n; ++c) {
      int d = forest.successor[static_cast<size_t>(c)];
      if (d == -1) continue;
      if (!deep[static_cast<size_t>(c)]) continue;
      if (ahead[static_cast<size_t>(d)]) continue;
      if (!crossing(fr, c, d, m)) continue;
      // f = (c -> d) is the last level-m crossing of every chain through it.
      Last0 down = Last0::none;
      if (last0[static_cast<size_t>(d)] != Last0::none) {
        down = last0[static_cast<size_t>(d)];
      } else if (auto t = crossing(fr, c, d, 0.0)) {
        down = classify(*t);
      }
      bool ok;
      if (down == Last0::in_segment) {
        ok = true;
      } else if (down == Last0::out_segment) {
        ok = false;
      } else {
        ok = upstream_qualifies(c);
      }
      if (ok) ++count;
    }
    out.push_back({L, m, count});
  }
  return out;
}

}  // namespace fpplab::forest
