#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "fpplab/geometry.hpp"
#include "fpplab/point_set.hpp"

namespace fpplab::graphs {

enum class GraphKind { delaunay, rng };

struct Edge {
  int i = 0;  // i < j
  int j = 0;
  double length = 0.0;
};

// Undirected geometric graph over a PointSet, with edge weights equal to the
// Euclidean distance between endpoints. Built by build_delaunay / build_rng;
// `degenerate` marks the all-collinear fallback (path graph along the line).
struct ProximityGraph {
  GraphKind kind = GraphKind::delaunay;
  std::shared_ptr<const geom::PointSet> points;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
  bool degenerate = false;

  int num_vertices() const { return static_cast<int>(adjacency.size()); }
  std::size_t num_edges() const;
  bool has_edge(int i, int j) const;
  const geom::Point2& position(int v) const {
    return points->points[static_cast<size_t>(v)];
  }
  double edge_length(int i, int j) const {
    return geom::dist(position(i), position(j));
  }
  // All edges with i < j, sorted lexicographically by (i, j).
  std::vector<Edge> edges() const;
};

// Delaunay triangulation as an edge graph. Cocircular ties are resolved by a
// symbolic perturbation ordered by point index (see predicates.hpp), which
// keeps, among the candidate diagonals of a cocircular quadrilateral, the one
// incident to the smallest index. All-collinear input degrades to the path
// graph along the line with `degenerate` set. Requires >= 2 points.
ProximityGraph build_delaunay(std::shared_ptr<const geom::PointSet> points);

// Relative neighborhood graph: edge (x,y) survives iff no third point z has
// max(|x-z|, |y-z|) < |x-y| (strict; boundary ties keep the edge).
ProximityGraph build_rng(std::shared_ptr<const geom::PointSet> points);

// Same RNG, computed by filtering an existing Delaunay graph.
ProximityGraph rng_from_delaunay(const ProximityGraph& delaunay);

// Edges whose closed segment intersects the circle (not disk) of the given
// center and radius. Requires radius > 0.
std::vector<Edge> edges_crossing_circle(const ProximityGraph& g,
                                        geom::Point2 center, double radius);

int max_degree(const ProximityGraph& g);

}  // namespace fpplab::graphs
