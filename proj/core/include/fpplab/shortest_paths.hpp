#pragma once

#include <optional>
#include <vector>

#include "fpplab/proximity_graph.hpp"

namespace fpplab::fpp {

// Vertical line x = offset acting as a one-way wall: an oriented step from u
// to v is forbidden iff x(u) >= offset >= x(v). Steps strictly to the right
// of the line, strictly to the left, or crossing left-to-right are allowed;
// landing on the line from the right (or on-line to on-line, or leaving it
// leftward) is not.
struct Barrier {
  double offset = 0.0;

  bool forbids(geom::Point2 from, geom::Point2 to) const {
    return from.x >= offset && offset >= to.x;
  }
};

// A path in the graph together with its length. `found` is false when the
// target is unreachable (possible for RNG components or under a barrier).
struct GeodesicPath {
  int source = -1;
  int target = -1;
  std::vector<int> vertices;  // source..target inclusive when found
  double length = 0.0;
  bool found = false;
  std::optional<double> barrier;  // restriction the path was computed under
};

// Shortest-path tree: parent[v] is the predecessor of v on the tree path from
// the root (parent[root] = -1); unreachable vertices have parent -1 and
// infinite dist. Tree paths replay pairwise queries exactly, tie-breaks
// included.
struct ShortestPathTree {
  int root = -1;
  std::vector<int> parent;
  std::vector<double> dist;
  std::optional<double> barrier;

  bool reached(int v) const;
  // Root-to-v vertex sequence; empty if v was not reached.
  std::vector<int> path_to(int v) const;
};

// Dijkstra with a total tie order: among equal-length paths the
// lexicographically smallest vertex sequence (from the source) wins.
GeodesicPath shortest_path(const graphs::ProximityGraph& g, int source, int target);

// Same, over steps admissible under the barrier (oriented source -> target).
GeodesicPath restricted_shortest_path(const graphs::ProximityGraph& g, int source,
                                      int target, Barrier barrier);

ShortestPathTree shortest_path_tree(const graphs::ProximityGraph& g, int root);

// Tree of barrier-admissible shortest paths oriented away from the root.
ShortestPathTree restricted_tree(const graphs::ProximityGraph& g, int root,
                                 Barrier barrier);

// True iff every contiguous subpath of `path` is a shortest path between its
// endpoints, within relative tolerance `tol`.
bool is_geodesic(const graphs::ProximityGraph& g, const std::vector<int>& path,
                 double tol = 1e-9);

}  // namespace fpplab::fpp
