#pragma once

#include <cstdint>
#include <vector>

#include "fpplab/geometry.hpp"
#include "fpplab/seed_stream.hpp"

namespace fpplab::geom {

// Finite point configuration in a window. Vertex ids are positions in
// `points` (canonical order is sampling order). Points are pairwise distinct
// and inside the window; use the factory / sampler so the invariants hold.
struct PointSet {
  std::vector<Point2> points;
  Window window;
  SeedStream seed;  // stream that produced the sample; zeroed for loaded sets

  int size() const { return static_cast<int>(points.size()); }
  const Point2& operator[](int i) const { return points[static_cast<size_t>(i)]; }

  // Window shrunk by margin_fraction * min(half_width, half_height) per side.
  Window observation_region(double margin_fraction = 0.1) const {
    double margin = margin_fraction * std::min(window.half_width, window.half_height);
    return window.shrunk(margin);
  }
};

// Homogeneous Poisson sample on the window: the count is Poisson with mean
// intensity * area, positions independent uniform. Exact duplicate positions
// are redrawn. Identical (window, intensity, stream) give identical sets.
PointSet sample_ppp(const Window& window, double intensity, SeedStream stream);

// Exactly `count` independent uniform positions (the Poisson sample
// conditioned on its count); duplicates redrawn as in sample_ppp.
PointSet sample_uniform(const Window& window, int count, SeedStream stream);

// Wraps externally supplied points. Throws std::invalid_argument if any point
// is outside the window, not finite, or duplicated.
PointSet make_point_set(std::vector<Point2> points, const Window& window);

// Index of the point closest to q; ties go to the smallest index.
// Throws std::invalid_argument on an empty set.
int nearest_vertex(const PointSet& ps, Point2 q);

}  // namespace fpplab::geom
