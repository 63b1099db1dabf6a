#pragma once

#include "fpplab/shortest_paths.hpp"

namespace fpplab::experiments {

// Number of components of the geodesic tree, truncated at distance r from
// the origin, that escape the observation disk of radius r_obs. Truncation
// deletes every initial tree path confined to the closed disk of radius r,
// keeping the first vertex beyond r; each kept subtree is one component.
// Requires 0 < r < r_obs.
int chi_r(const fpp::ShortestPathTree& tree, const graphs::ProximityGraph& g,
          double r, double r_obs);

// Same count restricted to components whose entry edge crosses the arc of
// arc length c centered at direction u on the radius-r circle. The arc is
// half-open (counterclockwise end excluded), so arcs partitioning the circle
// split chi_r exactly; c = 2*pi*r recovers chi_r. A root already outside the
// disk enters at the angle of its own position.
int chi_r_directional(const fpp::ShortestPathTree& tree,
                      const graphs::ProximityGraph& g, double r, double r_obs,
                      geom::Point2 u, double c);

}  // namespace fpplab::experiments
