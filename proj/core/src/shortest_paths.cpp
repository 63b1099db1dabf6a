#include "fpplab/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace fpplab::fpp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_vertex(const graphs::ProximityGraph& g, int v, const char* what) {
  if (v < 0 || v >= g.num_vertices()) {
    throw std::invalid_argument(std::string(what) + ": vertex id out of range");
  }
}

// Root-to-v sequence via parent pointers.
std::vector<int> unroll(const std::vector<int>& parent, int root, int v) {
  std::vector<int> seq;
  for (int u = v; u != -1; u = parent[static_cast<size_t>(u)]) seq.push_back(u);
  std::reverse(seq.begin(), seq.end());
  if (seq.empty() || seq.front() != root) return {};
  return seq;
}

// True if the path root..u, then v, is lexicographically smaller than the
// path root..w, then v. Only called on exact length ties, so the cost of
// materializing both chains is irrelevant.
bool lex_prefers(const std::vector<int>& parent, int root, int u, int w, int v) {
  std::vector<int> pu = unroll(parent, root, u);
  std::vector<int> pw = unroll(parent, root, w);
  pu.push_back(v);
  pw.push_back(v);
  return std::lexicographical_compare(pu.begin(), pu.end(), pw.begin(), pw.end());
}

struct DijkstraOut {
  std::vector<double> dist;
  std::vector<int> parent;
};

// `barrier` filters oriented steps; `stop_at` allows early exit once the
// target is settled (pass -1 to compute the full tree).
DijkstraOut dijkstra(const graphs::ProximityGraph& g, int source,
                     std::optional<Barrier> barrier, int stop_at) {
  int n = g.num_vertices();
  DijkstraOut out;
  out.dist.assign(static_cast<size_t>(n), kInf);
  out.parent.assign(static_cast<size_t>(n), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  std::vector<char> settled(static_cast<size_t>(n), 0);
  out.dist[static_cast<size_t>(source)] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[static_cast<size_t>(u)]) continue;
    settled[static_cast<size_t>(u)] = 1;
    if (u == stop_at) break;
    geom::Point2 pu = g.position(u);
    for (int v : g.adjacency[static_cast<size_t>(u)]) {
      if (settled[static_cast<size_t>(v)]) continue;
      if (barrier && barrier->forbids(pu, g.position(v))) continue;
      double nd = d + geom::dist(pu, g.position(v));
      double& dv = out.dist[static_cast<size_t>(v)];
      if (nd < dv) {
        dv = nd;
        out.parent[static_cast<size_t>(v)] = u;
        heap.push({nd, v});
      } else if (nd == dv && out.parent[static_cast<size_t>(v)] != u &&
                 lex_prefers(out.parent, source, u, out.parent[static_cast<size_t>(v)], v)) {
        out.parent[static_cast<size_t>(v)] = u;
      }
    }
  }
  return out;
}

GeodesicPath path_from(const DijkstraOut& d, const graphs::ProximityGraph&,
                       int source, int target, std::optional<double> barrier) {
  GeodesicPath p;
  p.source = source;
  p.target = target;
  p.barrier = barrier;
  if (d.dist[static_cast<size_t>(target)] == kInf) return p;
  p.vertices = unroll(d.parent, source, target);
  p.length = d.dist[static_cast<size_t>(target)];
  p.found = true;
  return p;
}

}  // namespace

bool ShortestPathTree::reached(int v) const {
  return v == root || parent[static_cast<size_t>(v)] != -1;
}

std::vector<int> ShortestPathTree::path_to(int v) const {
  if (!reached(v)) return {};
  return unroll(parent, root, v);
}

GeodesicPath shortest_path(const graphs::ProximityGraph& g, int source, int target) {
  check_vertex(g, source, "shortest_path");
  check_vertex(g, target, "shortest_path");
  auto d = dijkstra(g, source, std::nullopt, target);
  return path_from(d, g, source, target, std::nullopt);
}

GeodesicPath restricted_shortest_path(const graphs::ProximityGraph& g, int source,
                                      int target, Barrier barrier) {
  check_vertex(g, source, "restricted_shortest_path");
  check_vertex(g, target, "restricted_shortest_path");
  auto d = dijkstra(g, source, barrier, target);
  return path_from(d, g, source, target, barrier.offset);
}

ShortestPathTree shortest_path_tree(const graphs::ProximityGraph& g, int root) {
  check_vertex(g, root, "shortest_path_tree");
  auto d = dijkstra(g, root, std::nullopt, -1);
  return ShortestPathTree{root, std::move(d.parent), std::move(d.dist), std::nullopt};
}

ShortestPathTree restricted_tree(const graphs::ProximityGraph& g, int root,
                                 Barrier barrier) {
  check_vertex(g, root, "restricted_tree");
  auto d = dijkstra(g, root, barrier, -1);
  return ShortestPathTree{root, std::move(d.parent), std::move(d.dist), barrier.offset};
}

bool is_geodesic(const graphs::ProximityGraph& g, const std::vector<int>& path,
                 double tol) {
  if (path.empty()) return false;
  size_t k = path.size();
  for (size_t i = 0; i < k; ++i) check_vertex(g, path[i], "is_geodesic");
  for (size_t i = 0; i + 1 < k; ++i) {
    if (!g.has_edge(path[i], path[i + 1])) return false;
  }
  std::vector<double> prefix(k, 0.0);
  for (size_t i = 1; i < k; ++i) {
    prefix[i] = prefix[i - 1] + g.edge_length(path[i - 1], path[i]);
  }
  for (size_t i = 0; i + 1 < k; ++i) {
    auto d = dijkstra(g, path[i], std::nullopt, -1);
    for (size_t j = i + 1; j < k; ++j) {
      double sub = prefix[j] - prefix[i];
      double best = d.dist[static_cast<size_t>(path[j])];
      if (std::abs(sub - best) > tol * std::max({std::abs(sub), std::abs(best), 1.0})) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace fpplab::fpp
