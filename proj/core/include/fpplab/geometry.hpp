#pragma once

#include <algorithm>
#include <cmath>

namespace fpplab::geom {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist2(Point2 a, Point2 b) { return norm2(a - b); }
inline double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Lexicographic (x, then y) order; used for canonical orderings throughout.
inline bool lex_less(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Axis-aligned rectangle given by center and half extents.
struct Window {
  Point2 center;
  double half_width = 0.0;
  double half_height = 0.0;

  double area() const { return 4.0 * half_width * half_height; }
  bool contains(Point2 p) const {
    return std::abs(p.x - center.x) <= half_width &&
           std::abs(p.y - center.y) <= half_height;
  }
  // Window shrunk by `margin` on every side (used for observation regions).
  Window shrunk(double margin) const {
    return {center, half_width - margin, half_height - margin};
  }
};

// Distance from point q to the closed segment [a, b].
inline double dist_point_segment(Point2 q, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double len2 = norm2(ab);
  if (len2 == 0.0) return dist(q, a);
  double t = std::clamp(dot(q - a, ab) / len2, 0.0, 1.0);
  return dist(q, a + t * ab);
}

}  // namespace fpplab::geom
