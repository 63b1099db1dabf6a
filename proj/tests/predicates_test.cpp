#include <doctest.h>

#include <cmath>

#include "fpplab/predicates.hpp"
#include "fpplab/seed_stream.hpp"
#include "support/oracles.hpp"

using namespace fpplab;
using geom::Point2;

TEST_CASE("orient2 basics") {
  CHECK(geom::orient2({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(geom::orient2({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(geom::orient2({0, 0}, {1, 0}, {2, 0}) == 0);
}

TEST_CASE("in_circle basics") {
  CHECK(geom::in_circle({1, 0}, {0, 1}, {-1, 0}, {0, 0}) == 1);
  CHECK(geom::in_circle({1, 0}, {0, 1}, {-1, 0}, {0, -1}) == 0);  // cocircular
  CHECK(geom::in_circle({1, 0}, {0, 1}, {-1, 0}, {0, -2}) == -1);
  CHECK_THROWS_AS(geom::in_circle({0, 0}, {1, 0}, {2, 0}, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(geom::in_circle({0, 0}, {0, 1}, {1, 0}, {5, 5}),
                  std::invalid_argument);  // clockwise
}

TEST_CASE("orient2 agrees with the rational oracle on near-degenerate input") {
  geom::RandomEngine rng({101, 0});
  int exact_zero = 0;
  for (int trial = 0; trial < 1000000; ++trial) {
    Point2 a{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    Point2 b{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    // Near-collinear third point: along the segment, then a few ulps off.
    // One trial in sixteen repeats an endpoint, an exactly collinear triple.
    Point2 c;
    if (rng.next_u64() % 16 == 0) {
      c = rng.next_u64() % 2 ? a : b;
    } else {
      double t = rng.uniform(-0.5, 1.5);
      c = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      int bump = (int)(rng.next_u64() % 7) - 3;
      for (int k = 0; k < std::abs(bump); ++k) {
        c.y = std::nextafter(c.y, bump > 0 ? 10.0 : -10.0);
      }
    }
    int got = geom::orient2(a, b, c);
    int want = oracles::orient2_by_rationals(a, b, c);
    if (got != want) {
      CAPTURE(a.x);
      CAPTURE(b.x);
      CAPTURE(c.x);
      REQUIRE(got == want);
    }
    exact_zero += want == 0;
  }
  CHECK(exact_zero > 0);  // the adversarial generator does hit exact ties
}

TEST_CASE("in_circle agrees with the rational oracle on near-cocircular input") {
  geom::RandomEngine rng({102, 0});
  int checked = 0;
  for (int trial = 0; trial < 200000; ++trial) {
    double cx = rng.uniform(-2.0, 2.0), cy = rng.uniform(-2.0, 2.0);
    double r = rng.uniform(0.1, 3.0);
    auto on_circle = [&](double theta) {
      return Point2{cx + r * std::cos(theta), cy + r * std::sin(theta)};
    };
    Point2 a = on_circle(rng.uniform(0.0, 6.283185307179586));
    Point2 b = on_circle(rng.uniform(0.0, 6.283185307179586));
    Point2 c = on_circle(rng.uniform(0.0, 6.283185307179586));
    Point2 d = on_circle(rng.uniform(0.0, 6.283185307179586));
    int bump = (int)(rng.next_u64() % 5) - 2;
    for (int k = 0; k < std::abs(bump); ++k) {
      d.x = std::nextafter(d.x, bump > 0 ? 10.0 : -10.0);
    }
    if (geom::orient2(a, b, c) <= 0) std::swap(b, c);
    if (geom::orient2(a, b, c) <= 0) continue;  // degenerate triple, skip
    ++checked;
    int got = geom::in_circle(a, b, c, d);
    int want = oracles::in_circle_by_rationals(a, b, c, d);
    if (got != want) {
      CAPTURE(a.x);
      CAPTURE(d.x);
      REQUIRE(got == want);
    }
  }
  CHECK(checked > 150000);
}

TEST_CASE("compare_dist2 is an exact three-way comparison") {
  CHECK(geom::compare_dist2({0, 0}, {3, 4}, {0, 0}, {5, 0}) == 0);
  CHECK(geom::compare_dist2({0, 0}, {1, 1}, {0, 0}, {2, 0}) < 0);
  CHECK(geom::compare_dist2({0, 0}, {3, 0}, {0, 0}, {2, 2}) > 0);
  // A gap far below double rounding of the squared values.
  Point2 a{1e8, 0};
  Point2 b{1e8, 1e-4};
  CHECK(geom::compare_dist2({0, 0}, b, {0, 0}, a) > 0);
}

TEST_CASE("perturbed in_circle never reports cocircular") {
  // Four cocircular points: every perturbed query must take a side.
  Point2 a{1, 0}, b{0, 1}, c{-1, 0}, d{0, -1};
  int s = geom::in_circle_perturbed(a, 0, b, 1, c, 2, d, 3);
  CHECK(s != 0);
  // Lower indices are pulled inside: swapping which point has index 3 with
  // one that has index 0 flips the answer for the same geometry.
  int s2 = geom::in_circle_perturbed(a, 3, b, 1, c, 2, d, 0);
  CHECK(s2 != 0);
  CHECK(s != s2);
}
