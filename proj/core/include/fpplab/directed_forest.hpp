#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fpplab/shortest_paths.hpp"

namespace fpplab::forest {

// Direction of travel (unit vector) plus the radius of the far target used as
// a finite stand-in for "infinitely far in direction u".
struct DirectionSpec {
  geom::Point2 u;  // |u| = 1 within 1e-12
  double target_radius = 0.0;
};

void validate(const DirectionSpec& d);

// One out-edge per vertex pointing at the next hop of its geodesic toward the
// common far target; successor[v] is -1 for the target vertex itself and for
// vertices with no admissible path. Edges follow the shortest-path tree
// rooted at the target, so chains from any two vertices coincide once they
// meet.
struct DirectedForest {
  DirectionSpec direction;
  int target_vertex = -1;
  std::vector<int> successor;
  std::shared_ptr<const geom::PointSet> points;
};

struct CoalescenceReport {
  bool found = false;     // both sources reach the target
  int merge_vertex = -1;  // first common vertex of the two chains
  double merge_radius = 0.0;  // its distance to the origin
  bool genuine = false;   // merge_radius <= target_radius / 2
};

struct HighwayCount {
  double L = 0.0;
  double m = 0.0;
  int count = 0;
};

// Geodesic from x toward direction d: the root-ward path from x in the
// shortest-path tree rooted at the vertex nearest d.target_radius * d.u.
fpp::GeodesicPath directional_geodesic(const graphs::ProximityGraph& g, int x,
                                       const DirectionSpec& d);

DirectedForest build_directed_forest(const graphs::ProximityGraph& g,
                                     const DirectionSpec& d);

// Where the chains of x and x2 toward d first meet.
CoalescenceReport coalescence(const graphs::ProximityGraph& g, int x, int x2,
                              const DirectionSpec& d);

// Same, reusing a tree already rooted at the target of d.
CoalescenceReport coalescence_in_tree(const fpp::ShortestPathTree& tree,
                                      const geom::PointSet& ps, int x, int x2,
                                      const DirectionSpec& d);

// Smallest radius in `radii` (strictly increasing) from which the successor
// of x stays constant through the rest of the list; nullopt if the last two
// entries already disagree.
std::optional<double> first_edge_stability(const graphs::ProximityGraph& g, int x,
                                           geom::Point2 u,
                                           const std::vector<double>& radii);

// Batch form over forests built at each radius (same order as `radii`).
std::optional<double> stability_radius(const std::vector<DirectedForest>& forests,
                                       const std::vector<double>& radii, int x);

// Highway counts across the transverse line family of the forest direction.
// With w the forest direction, axial coordinate s(p) = <p, w> and transverse
// t(p) = <p, rot90(w)>, the line at level m is {s = m} and the base segment
// is {s = 0, t in [0, L)}. Counted at level m: distinct last-crossing forest
// edges of chains that (a) extend backward to the observation boundary and
// (b) have their last base-line crossing inside the segment. m = 0 gives the
// base segment count itself. Requires the target to lie axially beyond every
// m, and the segment inside the observation region (default: the point set's
// own; the overload takes it explicitly).
std::vector<HighwayCount> highway_counts(const DirectedForest& forest, double L,
                                         const std::vector<double>& m_values);
std::vector<HighwayCount> highway_counts(const DirectedForest& forest, double L,
                                         const std::vector<double>& m_values,
                                         const geom::Window& obs);

}  // namespace fpplab::forest
