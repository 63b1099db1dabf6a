#include "support/oracles.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace oracles {

namespace {

mpq_class q(double v) { return mpq_class(v); }

mpq_class dist2_q(Point2 a, Point2 b) {
  mpq_class dx = q(a.x) - q(b.x), dy = q(a.y) - q(b.y);
  return dx * dx + dy * dy;
}

}  // namespace

std::vector<std::pair<int, int>> delaunay_edges_by_definition(const PointSet& ps) {
  const int n = ps.size();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Disk centers c(t) = m + t*nrm, m the midpoint of (p_i, p_j), nrm the
      // rotated chord. Point k is strictly outside the disk through p_i, p_j
      // with center c(t) iff f_k(t) = |c-k|^2 - |c-p_i|^2 > 0, and f_k is
      // affine in t: f_k(t) = a + b*t.
      mpq_class ix = q(ps[i].x), iy = q(ps[i].y);
      mpq_class jx = q(ps[j].x), jy = q(ps[j].y);
      mpq_class mx = (ix + jx) / 2, my = (iy + jy) / 2;
      mpq_class nx = -(jy - iy), ny = jx - ix;
      bool ok = true;
      std::optional<mpq_class> lo, hi;
      for (int k = 0; k < n && ok; ++k) {
        if (k == i || k == j) continue;
        mpq_class kx = q(ps[k].x), ky = q(ps[k].y);
        mpq_class rx = kx - ix, ry = ky - iy;
        mpq_class a = kx * kx + ky * ky - ix * ix - iy * iy -
                      2 * (mx * rx + my * ry);
        mpq_class b = -2 * (nx * rx + ny * ry);
        if (b == 0) {
          if (a <= 0) ok = false;
        } else {
          mpq_class t = -a / b;
          if (b > 0) {
            if (!lo || t > *lo) lo = t;
          } else {
            if (!hi || t < *hi) hi = t;
          }
        }
      }
      if (ok && (!lo || !hi || *lo < *hi)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<std::pair<int, int>> rng_edges_by_definition(const PointSet& ps) {
  const int n = ps.size();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      mpq_class d2 = dist2_q(ps[i], ps[j]);
      bool witness = false;
      for (int k = 0; k < n && !witness; ++k) {
        if (k == i || k == j) continue;
        witness = dist2_q(ps[i], ps[k]) < d2 && dist2_q(ps[j], ps[k]) < d2;
      }
      if (!witness) out.push_back({i, j});
    }
  }
  return out;
}

int orient2_by_rationals(Point2 a, Point2 b, Point2 c) {
  mpq_class det = (q(b.x) - q(a.x)) * (q(c.y) - q(a.y)) -
                  (q(b.y) - q(a.y)) * (q(c.x) - q(a.x));
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

int in_circle_by_rationals(Point2 a, Point2 b, Point2 c, Point2 d) {
  mpq_class adx = q(a.x) - q(d.x), ady = q(a.y) - q(d.y);
  mpq_class bdx = q(b.x) - q(d.x), bdy = q(b.y) - q(d.y);
  mpq_class cdx = q(c.x) - q(d.x), cdy = q(c.y) - q(d.y);
  mpq_class al = adx * adx + ady * ady;
  mpq_class bl = bdx * bdx + bdy * bdy;
  mpq_class cl = cdx * cdx + cdy * cdy;
  mpq_class det = adx * (bdy * cl - cdy * bl) - ady * (bdx * cl - cdx * bl) +
                  al * (bdx * cdy - cdx * bdy);
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

namespace {

struct Enumeration {
  const ProximityGraph& g;
  int target;
  std::optional<double> barrier;
  std::vector<char> used;
  std::vector<int> cur;
  BestPath best;

  void visit(int v, double len) {
    if (v == target) {
      bool better = !best.found || len < best.length ||
                    (len == best.length && cur < best.vertices);
      if (better) best = {true, len, cur};
      return;
    }
    for (int w : g.adjacency[static_cast<size_t>(v)]) {
      if (used[static_cast<size_t>(w)]) continue;
      if (barrier && g.position(v).x >= *barrier &&
          *barrier >= g.position(w).x)
        continue;
      used[static_cast<size_t>(w)] = 1;
      cur.push_back(w);
      visit(w, len + fpplab::geom::dist(g.position(v), g.position(w)));
      cur.pop_back();
      used[static_cast<size_t>(w)] = 0;
    }
  }
};

}  // namespace

BestPath best_path_by_enumeration(const ProximityGraph& g, int s, int t,
                                  std::optional<double> barrier) {
  Enumeration e{g, t, barrier,
                std::vector<char>(static_cast<size_t>(g.num_vertices()), 0),
                {}, {}};
  e.used[static_cast<size_t>(s)] = 1;
  e.cur.push_back(s);
  e.visit(s, 0.0);
  return e.best;
}

namespace {

int chain_extend(const PointSet& ps, std::vector<char>& used, int cur,
                 double prev) {
  int best = 0;
  double p2 = prev * prev;
  for (int j = 0; j < ps.size(); ++j) {
    if (used[static_cast<size_t>(j)]) continue;
    if (fpplab::geom::dist2(ps[cur], ps[j]) > p2) continue;
    used[static_cast<size_t>(j)] = 1;
    best = std::max(
        best, 1 + chain_extend(ps, used, j, fpplab::geom::dist(ps[cur], ps[j])));
    used[static_cast<size_t>(j)] = 0;
  }
  return best;
}

}  // namespace

int longest_chain_by_recursion(const PointSet& ps, double b,
                               const Window& start_region) {
  std::vector<char> used(static_cast<size_t>(ps.size()), 0);
  int best = 0;
  for (int s = 0; s < ps.size(); ++s) {
    if (!start_region.contains(ps[s])) continue;
    used[static_cast<size_t>(s)] = 1;
    best = std::max(best, 1 + chain_extend(ps, used, s, b));
    used[static_cast<size_t>(s)] = 0;
  }
  return best;
}

bool segment_meets_circle(Point2 a, Point2 b, Point2 c, double r) {
  // f(t) = |a + t(b-a) - c|^2 - r^2 = A t^2 + 2 B t + C, convex (A >= 0):
  // the segment meets the circle iff min f <= 0 <= max f over [0,1].
  mpq_class ax = q(a.x) - q(c.x), ay = q(a.y) - q(c.y);
  mpq_class dx = q(b.x) - q(a.x), dy = q(b.y) - q(a.y);
  mpq_class A = dx * dx + dy * dy;
  mpq_class B = ax * dx + ay * dy;
  mpq_class C = ax * ax + ay * ay - q(r) * q(r);
  mpq_class f0 = C;
  mpq_class f1 = A + 2 * B + C;
  mpq_class fmax = std::max(f0, f1);
  mpq_class fmin = std::min(f0, f1);
  if (A > 0) {
    mpq_class tv = -B / A;
    if (tv > 0 && tv < 1) fmin = A * tv * tv + 2 * B * tv + C;
  }
  return fmin <= 0 && 0 <= fmax;
}

std::vector<std::pair<int, int>> edge_pairs(const ProximityGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.push_back({e.i, e.j});
  return out;
}

}  // namespace oracles
