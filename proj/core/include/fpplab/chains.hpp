#pragma once

#include "fpplab/point_set.hpp"

namespace fpplab::experiments {

struct ChainReport {
  double b = 0.0;
  int max_chain_length = 0;  // points, so a bare start counts 1
  geom::Window start_region;
  bool exact = true;  // false when the search budget cut a start short
  int starts = 0;     // points of ps inside start_region
};

// Longest sequence of distinct points that starts inside start_region and
// whose consecutive distances never increase, the first being at most b.
// Exhaustive unless the node budget trips, which the report discloses.
// Throws if b is not positive or the start region holds no point.
ChainReport descending_chains(const geom::PointSet& ps, double b,
                              const geom::Window& start_region);

}  // namespace fpplab::experiments
