#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fpplab/predicates.hpp"
#include "fpplab/proximity_graph.hpp"

namespace fpplab::graphs {

using geom::Point2;
using geom::PointSet;

namespace {

constexpr int kGhost = -1;

// Hilbert curve index on a 2^16 grid (classic bit-twiddling walk).
std::uint32_t hilbert_index(std::uint32_t x, std::uint32_t y) {
  std::uint32_t d = 0;
  for (std::uint32_t s = 1u << 15; s > 0; s >>= 1) {
    std::uint32_t rx = (x & s) ? 1 : 0;
    std::uint32_t ry = (y & s) ? 1 : 0;
    d += s * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - x;
        y = s - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

std::vector<int> spatial_order(const std::vector<Point2>& pts) {
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const Point2& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  double sx = xmax > xmin ? 65535.0 / (xmax - xmin) : 0.0;
  double sy = ymax > ymin ? 65535.0 / (ymax - ymin) : 0.0;
  std::vector<std::uint32_t> key(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    auto gx = static_cast<std::uint32_t>((pts[i].x - xmin) * sx);
    auto gy = static_cast<std::uint32_t>((pts[i].y - ymin) * sy);
    key[i] = hilbert_index(gx, gy);
  }
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return key[a] != key[b] ? key[a] < key[b] : a < b;
  });
  return order;
}

// Incremental Bowyer-Watson triangulation with ghost triangles closing the
// hull. Ghost triangles carry kGhost in one slot; their real (hull) edge is
// directed clockwise around the hull, i.e. the outside is to its left.
class Triangulator {
 public:
  explicit Triangulator(const std::vector<Point2>& pts) : pts_(pts) {}

  // Returns false if every point is collinear with the first two.
  bool run() {
    std::vector<int> order = spatial_order(pts_);
    size_t third = 2;
    while (third < order.size() &&
           geom::orient2(pts_[order[0]], pts_[order[1]], pts_[order[third]]) == 0) {
      ++third;
    }
    if (third >= order.size()) return false;
    std::swap(order[2], order[third]);
    init_triangle(order[0], order[1], order[2]);
    for (size_t k = 3; k < order.size(); ++k) insert(order[k]);
    return true;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(pts_.size());
    for (size_t t = 0; t < tri_.size(); ++t) {
      if (!alive_[t] || is_ghost(static_cast<int>(t))) continue;
      for (int k = 0; k < 3; ++k) {
        int u = tri_[t].v[(k + 1) % 3];
        int v = tri_[t].v[(k + 2) % 3];
        // Each interior edge is shared by two triangles; keep the u < v copy.
        // Hull edges appear once, owned by the real triangle.
        if (u < v || is_ghost(tri_[t].n[k])) {
          adj[static_cast<size_t>(std::min(u, v))].push_back(std::max(u, v));
        }
      }
    }
    std::vector<std::vector<int>> full(pts_.size());
    for (size_t u = 0; u < adj.size(); ++u) {
      std::sort(adj[u].begin(), adj[u].end());
      adj[u].erase(std::unique(adj[u].begin(), adj[u].end()), adj[u].end());
      for (int v : adj[u]) {
        full[u].push_back(v);
        full[static_cast<size_t>(v)].push_back(static_cast<int>(u));
      }
    }
    for (auto& list : full) std::sort(list.begin(), list.end());
    return full;
  }

 private:
  struct Tri {
    std::array<int, 3> v;
    std::array<int, 3> n;  // neighbor across corner k, sharing edge (v[k+1], v[k+2])
  };

  bool is_ghost(int t) const {
    const auto& v = tri_[static_cast<size_t>(t)].v;
    return v[0] == kGhost || v[1] == kGhost || v[2] == kGhost;
  }

  int ghost_slot(int t) const {
    const auto& v = tri_[static_cast<size_t>(t)].v;
    if (v[0] == kGhost) return 0;
    return v[1] == kGhost ? 1 : 2;
  }

  int new_tri(int a, int b, int c) {
    int id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      alive_[static_cast<size_t>(id)] = true;
    } else {
      id = static_cast<int>(tri_.size());
      tri_.push_back({});
      alive_.push_back(true);
      mark_.push_back(0);
    }
    tri_[static_cast<size_t>(id)].v = {a, b, c};
    tri_[static_cast<size_t>(id)].n = {-1, -1, -1};
    return id;
  }

  void kill(int t) {
    alive_[static_cast<size_t>(t)] = false;
    free_.push_back(t);
  }

  static int slot_of_edge(const Tri& t, int a, int b) {
    for (int k = 0; k < 3; ++k) {
      if (t.v[(k + 1) % 3] == a && t.v[(k + 2) % 3] == b) return k;
    }
    return -1;
  }

  void link(int t, int slot, int nb) {
    tri_[static_cast<size_t>(t)].n[static_cast<size_t>(slot)] = nb;
  }

  void init_triangle(int i0, int i1, int i2) {
    if (geom::orient2(pts_[i0], pts_[i1], pts_[i2]) < 0) std::swap(i1, i2);
    int t = new_tri(i0, i1, i2);
    int gab = new_tri(i1, i0, kGhost);
    int gbc = new_tri(i2, i1, kGhost);
    int gca = new_tri(i0, i2, kGhost);
    // Real triangle edges: opp0=(i1,i2)->gbc, opp1=(i2,i0)->gca, opp2=(i0,i1)->gab.
    tri_[static_cast<size_t>(t)].n = {gbc, gca, gab};
    // Ghost (b,a,G): opp0=(a,G), opp1=(G,b), opp2=(b,a)->real.
    tri_[static_cast<size_t>(gab)].n = {gca, gbc, t};
    tri_[static_cast<size_t>(gbc)].n = {gab, gca, t};
    tri_[static_cast<size_t>(gca)].n = {gbc, gab, t};
    hint_ = t;
  }

  bool conflicts(int t, int p) const {
    const Tri& tr = tri_[static_cast<size_t>(t)];
    if (!is_ghost(t)) {
      return geom::in_circle_perturbed(pts_[tr.v[0]], tr.v[0], pts_[tr.v[1]],
                                       tr.v[1], pts_[tr.v[2]], tr.v[2],
                                       pts_[p], p) > 0;
    }
    int g = ghost_slot(t);
    int u = tr.v[(g + 1) % 3];
    int v = tr.v[(g + 2) % 3];
    int s = geom::orient2(pts_[u], pts_[v], pts_[p]);
    if (s > 0) return true;  // strictly outside the hull across this edge
    if (s < 0) return false;
    // Collinear with the hull edge: conflict only if p splits it.
    Point2 lo = pts_[u], hi = pts_[v];
    if (!geom::lex_less(lo, hi)) std::swap(lo, hi);
    return geom::lex_less(lo, pts_[p]) && geom::lex_less(pts_[p], hi);
  }

  int locate(int p) const {
    int t = hint_;
    if (is_ghost(t)) t = tri_[static_cast<size_t>(t)].n[ghost_slot(t)];
    int prev = -1;
    for (;;) {
      const Tri& tr = tri_[static_cast<size_t>(t)];
      int next = -1;
      for (int k = 0; k < 3; ++k) {
        int nb = tr.n[k];
        if (nb == prev) continue;
        int a = tr.v[(k + 1) % 3];
        int b = tr.v[(k + 2) % 3];
        if (geom::orient2(pts_[a], pts_[b], pts_[p]) < 0) {
          next = nb;
          break;
        }
      }
      if (next == -1) return t;
      if (is_ghost(next)) return next;
      prev = t;
      t = next;
    }
  }

  void insert(int p) {
    int start = locate(p);
    // Conflict cavity (depth-first flood from the located triangle).
    ++epoch_;
    cavity_.clear();
    boundary_.clear();
    stack_.clear();
    stack_.push_back(start);
    mark_[static_cast<size_t>(start)] = epoch_;
    while (!stack_.empty()) {
      int t = stack_.back();
      stack_.pop_back();
      cavity_.push_back(t);
      const Tri tr = tri_[static_cast<size_t>(t)];
      for (int k = 0; k < 3; ++k) {
        int nb = tr.n[k];
        if (mark_[static_cast<size_t>(nb)] == epoch_) continue;
        if (conflicts(nb, p)) {
          mark_[static_cast<size_t>(nb)] = epoch_;
          stack_.push_back(nb);
        } else {
          boundary_.push_back({tr.v[(k + 1) % 3], tr.v[(k + 2) % 3], nb});
        }
      }
    }
    for (int t : cavity_) kill(t);
    // Refill: one new triangle (A, B, p) per boundary edge, linked in a ring.
    created_.clear();
    for (const BoundaryEdge& e : boundary_) {
      int t = new_tri(e.a, e.b, p);
      link(t, 2, e.outside);
      int back = slot_of_edge(tri_[static_cast<size_t>(e.outside)], e.b, e.a);
      link(e.outside, back, t);
      created_.push_back(t);
    }
    for (int t : created_) {
      const Tri& tr = tri_[static_cast<size_t>(t)];
      for (int s : created_) {
        if (tri_[static_cast<size_t>(s)].v[0] == tr.v[1]) link(t, 0, s);  // edge (B,p)
        if (tri_[static_cast<size_t>(s)].v[1] == tr.v[0]) link(t, 1, s);  // edge (p,A)
      }
    }
    for (int t : created_) {
      if (!is_ghost(t)) {
        hint_ = t;
        return;
      }
    }
    hint_ = created_.front();
  }

  struct BoundaryEdge {
    int a, b, outside;
  };

  const std::vector<Point2>& pts_;
  std::vector<Tri> tri_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> mark_;
  std::vector<int> free_;
  std::vector<int> cavity_, stack_, created_;
  std::vector<BoundaryEdge> boundary_;
  std::uint32_t epoch_ = 0;
  int hint_ = 0;
};

std::vector<std::vector<int>> collinear_path_adjacency(const std::vector<Point2>& pts) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return geom::lex_less(pts[a], pts[b]); });
  std::vector<std::vector<int>> adj(pts.size());
  for (size_t k = 1; k < order.size(); ++k) {
    adj[static_cast<size_t>(order[k - 1])].push_back(order[k]);
    adj[static_cast<size_t>(order[k])].push_back(order[k - 1]);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

ProximityGraph build_delaunay(std::shared_ptr<const PointSet> points) {
  if (!points || points->size() < 2) {
    throw std::invalid_argument("build_delaunay: need at least 2 points");
  }
  ProximityGraph g;
  g.kind = GraphKind::delaunay;
  g.points = points;
  Triangulator tr(points->points);
  if (tr.run()) {
    g.adjacency = tr.adjacency();
    g.degenerate = false;
  } else {
    g.adjacency = collinear_path_adjacency(points->points);
    g.degenerate = true;
  }
  return g;
}

}  // namespace fpplab::graphs
