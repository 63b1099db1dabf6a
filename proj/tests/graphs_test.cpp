#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "fpplab/predicates.hpp"
#include "fpplab/proximity_graph.hpp"
#include "support/oracles.hpp"

using namespace fpplab;
using geom::Point2;
using geom::Window;

namespace {

std::shared_ptr<geom::PointSet> points_in(const Window& w,
                                          std::vector<Point2> pts) {
  return std::make_shared<geom::PointSet>(geom::make_point_set(std::move(pts), w));
}

std::shared_ptr<geom::PointSet> sample(int count, double half, uint64_t seed) {
  return std::make_shared<geom::PointSet>(
      geom::sample_uniform({{0, 0}, half, half}, count, {seed, 0}));
}

}  // namespace

TEST_CASE("three points make a triangle") {
  auto ps = points_in({{0, 0}, 5, 5}, {{0, 0}, {3, 0}, {0, 4}});
  auto g = graphs::build_delaunay(ps);
  CHECK(g.num_edges() == 3);
  CHECK(!g.degenerate);
}

TEST_CASE("cocircular square keeps the diagonal at the smallest index") {
  // Any vertex order: the surviving diagonal is the one incident to index 0.
  std::vector<std::vector<Point2>> orders = {
      {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
      {{1, 0}, {0, 0}, {1, 1}, {0, 1}},
      {{1, 1}, {0, 1}, {0, 0}, {1, 0}},
  };
  for (const auto& corners : orders) {
    auto ps = points_in({{0.5, 0.5}, 1, 1}, corners);
    auto g = graphs::build_delaunay(ps);
    CHECK(g.num_edges() == 5);
    // The diagonal partner of vertex 0 is the corner at distance sqrt(2).
    int partner = -1;
    for (int k = 1; k < 4; ++k) {
      if (geom::dist2(corners[0], corners[(size_t)k]) > 1.5) partner = k;
    }
    REQUIRE(partner != -1);
    CHECK(g.has_edge(0, partner));
  }
}

TEST_CASE("collinear input degrades to the flagged path graph") {
  auto ps = points_in({{0, 0}, 5, 1}, {{-3, 0}, {1, 0}, {-1, 0}, {4, 0}});
  auto g = graphs::build_delaunay(ps);
  CHECK(g.degenerate);
  CHECK(g.num_edges() == 3);
  CHECK(g.has_edge(0, 2));  // neighbors along the line, not by index
  CHECK(g.has_edge(2, 1));
  CHECK(g.has_edge(1, 3));
}

TEST_CASE("delaunay equals the empty-disk definition on random sets") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    auto ps = sample(30, 10.0, seed);
    auto g = graphs::build_delaunay(ps);
    CHECK(oracles::edge_pairs(g) == oracles::delaunay_edges_by_definition(*ps));
  }
}

TEST_CASE("rng basics") {
  auto two = points_in({{0, 0}, 5, 5}, {{-1, 0}, {1, 0}});
  CHECK(graphs::build_rng(two).num_edges() == 1);

  // Right isoceles triangle: the hypotenuse is strictly blocked by the
  // right-angle corner, the legs survive.
  auto tri = points_in({{0, 0}, 2, 2}, {{0, 0}, {1, 0}, {0, 1}});
  auto tri_rng = graphs::build_rng(tri);
  CHECK(tri_rng.num_edges() == 2);
  CHECK(tri_rng.has_edge(0, 1));
  CHECK(tri_rng.has_edge(0, 2));

  // 3-4-5 triangle with integer coordinates: the witness distance for every
  // edge TIES the edge length exactly, and ties do not block, so the
  // strict-inequality boundary keeps all three edges.
  auto pyth = points_in({{0, 0}, 6, 6}, {{0, 0}, {5, 0}, {3, 4}});
  CHECK(graphs::build_rng(pyth).num_edges() == 3);
}

TEST_CASE("rng equals the witness definition and sits inside delaunay") {
  for (uint64_t seed = 21; seed <= 32; ++seed) {
    auto ps = sample(30, 10.0, seed);
    auto del = graphs::build_delaunay(ps);
    auto rng = graphs::build_rng(ps);
    CHECK(oracles::edge_pairs(rng) == oracles::rng_edges_by_definition(*ps));

    auto del_pairs = oracles::edge_pairs(del);
    std::set<std::pair<int, int>> del_set(del_pairs.begin(), del_pairs.end());
    for (const auto& e : oracles::edge_pairs(rng)) CHECK(del_set.count(e) == 1);
  }
}

TEST_CASE("rng_from_delaunay matches the direct construction") {
  auto ps = sample(200, 15.0, 77);
  auto del = graphs::build_delaunay(ps);
  auto direct = graphs::build_rng(ps);
  auto filtered = graphs::rng_from_delaunay(del);
  CHECK(filtered.adjacency == direct.adjacency);
  CHECK(filtered.kind == graphs::GraphKind::rng);
  CHECK_THROWS_AS(graphs::rng_from_delaunay(direct), std::invalid_argument);
}

TEST_CASE("rng degree stays at most six") {
  for (uint64_t seed = 41; seed <= 45; ++seed) {
    auto ps = sample(600, 15.0, seed);
    auto rng = graphs::build_rng(ps);
    CHECK(graphs::max_degree(rng) <= 6);
  }
  auto single = points_in({{0, 0}, 2, 2}, {{-1, 0}, {1, 0}});
  CHECK(graphs::max_degree(graphs::build_rng(single)) == 1);
}

TEST_CASE("max_degree equals a direct recount") {
  auto ps = sample(150, 10.0, 51);
  auto g = graphs::build_delaunay(ps);
  size_t widest = 0;
  for (const auto& nbrs : g.adjacency) widest = std::max(widest, nbrs.size());
  CHECK(graphs::max_degree(g) == (int)widest);
}

TEST_CASE("delaunay is planar and connected") {
  auto ps = sample(500, 20.0, 61);
  auto g = graphs::build_delaunay(ps);
  auto edges = g.edges();

  // No two edges properly cross: for non-adjacent edges, the endpoints of
  // each must not straddle the other's supporting line simultaneously.
  for (size_t e = 0; e < edges.size(); ++e) {
    for (size_t f = e + 1; f < edges.size(); ++f) {
      const auto& a = edges[e];
      const auto& b = edges[f];
      if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) continue;
      Point2 p1 = g.position(a.i), p2 = g.position(a.j);
      Point2 p3 = g.position(b.i), p4 = g.position(b.j);
      bool cross = geom::orient2(p1, p2, p3) * geom::orient2(p1, p2, p4) < 0 &&
                   geom::orient2(p3, p4, p1) * geom::orient2(p3, p4, p2) < 0;
      if (cross) {
        CAPTURE(a.i);
        CAPTURE(b.i);
        REQUIRE(!cross);
      }
    }
  }

  // Connectivity by traversal.
  std::vector<char> seen((size_t)g.num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : g.adjacency[(size_t)v]) {
      if (!seen[(size_t)w]) {
        seen[(size_t)w] = 1;
        stack.push_back(w);
      }
    }
  }
  CHECK(reached == g.num_vertices());
}

TEST_CASE("adjacency is symmetric, sorted, and loop-free") {
  auto ps = sample(120, 10.0, 71);
  for (auto g : {graphs::build_delaunay(ps), graphs::build_rng(ps)}) {
    for (int v = 0; v < g.num_vertices(); ++v) {
      const auto& nbrs = g.adjacency[(size_t)v];
      CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
      for (int w : nbrs) {
        CHECK(w != v);
        CHECK(g.has_edge(w, v));
      }
    }
  }
}

TEST_CASE("edges_crossing_circle matches the quadratic-sign oracle") {
  auto enclosing = sample(40, 5.0, 81);
  auto g0 = graphs::build_delaunay(enclosing);
  CHECK(graphs::edges_crossing_circle(g0, {0, 0}, 100.0).empty());

  auto pair = points_in({{0, 0}, 5, 5}, {{0, 0}, {4, 0}});
  auto g1 = graphs::build_delaunay(pair);
  auto crossing = graphs::edges_crossing_circle(g1, {0, 0}, 2.0);
  REQUIRE(crossing.size() == 1);
  CHECK(crossing[0].i == 0);
  CHECK(crossing[0].j == 1);

  auto ps = sample(200, 10.0, 82);
  auto g = graphs::build_delaunay(ps);
  for (double r : {2.0, 5.0, 9.0}) {
    std::set<std::pair<int, int>> got;
    for (const auto& e : graphs::edges_crossing_circle(g, {1.0, -0.5}, r)) {
      got.insert({e.i, e.j});
    }
    std::set<std::pair<int, int>> want;
    for (const auto& e : g.edges()) {
      if (oracles::segment_meets_circle(g.position(e.i), g.position(e.j),
                                        {1.0, -0.5}, r)) {
        want.insert({e.i, e.j});
      }
    }
    CHECK(got == want);
  }
}
