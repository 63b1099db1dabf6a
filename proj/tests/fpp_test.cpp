#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "fpplab/proximity_graph.hpp"
#include "fpplab/shortest_paths.hpp"
#include "support/oracles.hpp"

using namespace fpplab;
using geom::Point2;
using geom::Window;

namespace {

std::shared_ptr<geom::PointSet> small_instance(uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::vector<Point2> pts;
  pts.reserve((size_t)n);
  while ((int)pts.size() < n) {
    Point2 p{coord(rng), coord(rng)};
    bool dup = false;
    for (const auto& q : pts) dup = dup || (p == q);
    if (!dup) pts.push_back(p);
  }
  return std::make_shared<geom::PointSet>(
      geom::make_point_set(pts, {{0, 0}, 10, 10}));
}

}  // namespace

TEST_CASE("trivial shortest path cases") {
  auto ps = small_instance(1, 5);
  auto g = graphs::build_delaunay(ps);

  fpp::GeodesicPath self = fpp::shortest_path(g, 3, 3);
  CHECK(self.found);
  CHECK(self.vertices == std::vector<int>{3});
  CHECK(self.length == 0.0);

  // An adjacent pair is joined by its direct edge: any detour through a
  // third vertex is strictly longer by the triangle inequality.
  auto edges = g.edges();
  REQUIRE(!edges.empty());
  auto e = edges.front();
  fpp::GeodesicPath direct = fpp::shortest_path(g, e.i, e.j);
  CHECK(direct.vertices == std::vector<int>{e.i, e.j});
  CHECK(direct.length == doctest::Approx(e.length));
}

TEST_CASE("shortest path matches exhaustive enumeration") {
  for (uint64_t seed = 100; seed < 130; ++seed) {
    int n = 8 + (int)(seed % 3);
    auto ps = small_instance(seed, n);
    auto g = (seed % 2) ? graphs::build_delaunay(ps) : graphs::build_rng(ps);
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        fpp::GeodesicPath got = fpp::shortest_path(g, s, t);
        oracles::BestPath want =
            oracles::best_path_by_enumeration(g, s, t, std::nullopt);
        REQUIRE(got.found == want.found);
        if (!want.found) continue;
        CHECK(std::abs(got.length - want.length) <=
              1e-12 * std::max(1.0, want.length));
        CHECK(got.vertices == want.vertices);
      }
    }
  }
}

TEST_CASE("restricted shortest path matches enumeration with a barrier") {
  for (uint64_t seed = 200; seed < 230; ++seed) {
    auto ps = small_instance(seed, 9);
    auto g = graphs::build_delaunay(ps);
    for (double offset : {-4.0, 0.0, 3.5}) {
      fpp::Barrier b{offset};
      for (int s = 0; s < 9; s += 2) {
        for (int t = 1; t < 9; t += 2) {
          fpp::GeodesicPath got = fpp::restricted_shortest_path(g, s, t, b);
          oracles::BestPath want =
              oracles::best_path_by_enumeration(g, s, t, offset);
          REQUIRE(got.found == want.found);
          if (!want.found) continue;
          CHECK(std::abs(got.length - want.length) <=
                1e-12 * std::max(1.0, want.length));
          CHECK(got.vertices == want.vertices);
          // Restriction can only lengthen the route.
          fpp::GeodesicPath free_path = fpp::shortest_path(g, s, t);
          CHECK(got.length >= free_path.length - 1e-9);
        }
      }
    }
  }
}

TEST_CASE("barrier left of every point changes nothing") {
  auto ps = small_instance(42, 10);
  auto g = graphs::build_delaunay(ps);
  fpp::Barrier far_left{-100.0};
  for (int t = 1; t < 10; ++t) {
    fpp::GeodesicPath a = fpp::shortest_path(g, 0, t);
    fpp::GeodesicPath b = fpp::restricted_shortest_path(g, 0, t, far_left);
    CHECK(a.vertices == b.vertices);
    CHECK(a.length == b.length);
  }
}

TEST_CASE("barrier between target and source blocks every route") {
  // All rightward steps across the line are forbidden, so a target strictly
  // left of the barrier is unreachable from a source strictly right of it.
  auto ps = std::make_shared<geom::PointSet>(geom::make_point_set(
      {{-5.0, 0.0}, {-1.0, 1.0}, {1.0, -1.0}, {5.0, 0.5}}, {{0, 0}, 10, 10}));
  auto g = graphs::build_delaunay(ps);
  fpp::GeodesicPath blocked =
      fpp::restricted_shortest_path(g, 3, 0, fpp::Barrier{0.0});
  CHECK(!blocked.found);
  CHECK(blocked.vertices.empty());
  CHECK(blocked.length == 0.0);

  // Leftward travel across the same line stays legal.
  fpp::GeodesicPath open_dir =
      fpp::restricted_shortest_path(g, 0, 3, fpp::Barrier{0.0});
  CHECK(open_dir.found);
}

TEST_CASE("is_geodesic accepts solver output and rejects detours") {
  auto ps = small_instance(77, 10);
  auto g = graphs::build_delaunay(ps);
  for (int t = 1; t < 10; ++t) {
    fpp::GeodesicPath p = fpp::shortest_path(g, 0, t);
    REQUIRE(p.found);
    CHECK(fpp::is_geodesic(g, p.vertices));
  }
  CHECK(fpp::is_geodesic(g, fpp::shortest_path(g, 4, 4).vertices));

  // Splice a detour into some two-hop geodesic: the result walks real edges
  // but is no longer optimal.
  bool exercised = false;
  for (int t = 1; t < 10 && !exercised; ++t) {
    fpp::GeodesicPath p = fpp::shortest_path(g, 0, t);
    if (p.vertices.size() != 2) continue;
    for (int mid : g.adjacency[0]) {
      if (mid == t || !g.has_edge(mid, t)) continue;
      CHECK(!fpp::is_geodesic(g, {0, mid, t}));
      exercised = true;
      break;
    }
  }
  CHECK(exercised);
}

TEST_CASE("shortest path tree agrees with pairwise queries") {
  auto ps = std::make_shared<geom::PointSet>(
      geom::sample_ppp({{0, 0}, 7.0, 7.0}, 1.0, {5, 0}));
  REQUIRE(ps->size() <= 400);
  auto g = graphs::build_delaunay(ps);
  int root = geom::nearest_vertex(*ps, {0, 0});
  fpp::ShortestPathTree tree = fpp::shortest_path_tree(g, root);
  CHECK(tree.parent[(size_t)root] == -1);
  CHECK(tree.dist[(size_t)root] == 0.0);

  for (int v = 0; v < g.num_vertices(); ++v) {
    REQUIRE(tree.reached(v));
    fpp::GeodesicPath p = fpp::shortest_path(g, root, v);
    CHECK(tree.dist[(size_t)v] == doctest::Approx(p.length).epsilon(1e-12));
    std::vector<int> unrolled = tree.path_to(v);
    CHECK(unrolled == p.vertices);
    CHECK(fpp::is_geodesic(g, unrolled));
  }
}

TEST_CASE("restricted tree matches restricted pairwise queries") {
  auto ps = std::make_shared<geom::PointSet>(
      geom::sample_ppp({{0, 0}, 6.0, 6.0}, 1.0, {6, 0}));
  auto g = graphs::build_delaunay(ps);
  int root = geom::nearest_vertex(*ps, {5.0, 0.0});
  fpp::Barrier b{-2.0};
  fpp::ShortestPathTree tree = fpp::restricted_tree(g, root, b);
  for (int v = 0; v < g.num_vertices(); ++v) {
    fpp::GeodesicPath p = fpp::restricted_shortest_path(g, root, v, b);
    CHECK(tree.reached(v) == p.found);
    if (!p.found) {
      // Unreachable exactly when the vertex sits beyond the barrier.
      CHECK((*ps)[v].x <= b.offset);
      continue;
    }
    CHECK(tree.dist[(size_t)v] == doctest::Approx(p.length).epsilon(1e-12));
    CHECK(tree.path_to(v) == p.vertices);
  }

  // A barrier left of the whole window leaves the tree unchanged.
  fpp::ShortestPathTree free_tree = fpp::shortest_path_tree(g, root);
  fpp::ShortestPathTree inactive = fpp::restricted_tree(g, root, {-50.0});
  CHECK(inactive.parent == free_tree.parent);
  CHECK(inactive.dist == free_tree.dist);
}

TEST_CASE("graph distance dominates the chord") {
  auto ps = std::make_shared<geom::PointSet>(
      geom::sample_ppp({{0, 0}, 8.0, 8.0}, 1.0, {9, 0}));
  auto g = graphs::build_delaunay(ps);
  fpp::ShortestPathTree tree = fpp::shortest_path_tree(g, 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    CHECK(tree.dist[(size_t)v] >= geom::dist((*ps)[0], (*ps)[v]) - 1e-9);
  }
}

TEST_CASE("prefixes of geodesics are geodesics") {
  auto ps = small_instance(55, 10);
  auto g = graphs::build_delaunay(ps);
  for (int t = 1; t < 10; ++t) {
    fpp::GeodesicPath p = fpp::shortest_path(g, 0, t);
    REQUIRE(p.found);
    for (size_t k = 1; k < p.vertices.size(); ++k) {
      fpp::GeodesicPath sub = fpp::shortest_path(g, 0, p.vertices[k]);
      double prefix_len = 0;
      for (size_t e = 0; e < k; ++e) {
        prefix_len += g.edge_length(p.vertices[e], p.vertices[e + 1]);
      }
      CHECK(sub.length == doctest::Approx(prefix_len).epsilon(1e-12));
    }
  }
}

TEST_CASE("invalid queries throw") {
  auto ps = small_instance(3, 6);
  auto g = graphs::build_delaunay(ps);
  CHECK_THROWS_AS(fpp::shortest_path(g, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(fpp::shortest_path(g, 0, 6), std::invalid_argument);
  CHECK_THROWS_AS(fpp::shortest_path_tree(g, 17), std::invalid_argument);
}
