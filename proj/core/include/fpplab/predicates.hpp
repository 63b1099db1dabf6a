#pragma once

#include "fpplab/geometry.hpp"

namespace fpplab::geom {

// Exact sign predicates: fast double evaluation guarded by a static error
// bound, falling back to exact rational arithmetic when inconclusive. The
// returned sign is always the sign of the exact real-arithmetic value.

// +1 if (a,b,c) is a counterclockwise turn, -1 if clockwise, 0 if collinear.
int orient2(Point2 a, Point2 b, Point2 c);

// +1 if d lies strictly inside the circumcircle of (a,b,c), -1 if strictly
// outside, 0 if the four points are cocircular. (a,b,c) must be oriented
// counterclockwise; throws std::invalid_argument otherwise.
int in_circle(Point2 a, Point2 b, Point2 c, Point2 d);

// in_circle with symbolic perturbation, for degenerate (cocircular) input:
// point i is lifted onto the paraboloid at height |p_i|^2 - delta_i with
// delta_0 >> delta_1 >> ... > 0, so cocircular ties resolve as if the point
// with the smallest index were pulled slightly inside every circle through
// it. Never returns 0 unless all four points are collinear, which is outside
// the contract. (a,b,c) counterclockwise, indices pairwise distinct.
int in_circle_perturbed(Point2 a, int ia, Point2 b, int ib, Point2 c, int ic,
                        Point2 d, int id);

// Sign of |p-q|^2 - |r-s|^2, exact.
int compare_dist2(Point2 p, Point2 q, Point2 r, Point2 s);

}  // namespace fpplab::geom
