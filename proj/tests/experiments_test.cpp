#include <doctest.h>

#include <cmath>

#include "fpplab/experiments.hpp"

using namespace fpplab;
using experiments::ExperimentConfig;
using experiments::StatRow;
using experiments::StatRows;

namespace {

ExperimentConfig base_config() {
  ExperimentConfig cfg;
  cfg.window = {{0, 0}, 60, 60};
  cfg.intensity = 1.0;
  cfg.master_seed = 77;
  cfg.replicates = 4;
  cfg.threads = 1;
  return cfg;
}

bool rows_equal(const StatRows& a, const StatRows& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].statistic != b[i].statistic || a[i].params != b[i].params ||
        a[i].estimate != b[i].estimate || a[i].std_error != b[i].std_error ||
        a[i].replicates != b[i].replicates || a[i].excluded != b[i].excluded) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("config validation names the offending field") {
  ExperimentConfig cfg = base_config();
  CHECK_NOTHROW(experiments::validate(cfg));

  auto expect_message = [](ExperimentConfig bad, const char* needle) {
    try {
      experiments::validate(bad);
      FAIL_CHECK("expected a validation error mentioning " << needle);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  ExperimentConfig bad = base_config();
  bad.intensity = -1.0;
  expect_message(bad, "intensity");
  bad = base_config();
  bad.replicates = 0;
  expect_message(bad, "replicates");
  bad = base_config();
  bad.margin_fraction = 0.5;
  expect_message(bad, "margin_fraction");
  bad = base_config();
  bad.exact_count = -3;
  expect_message(bad, "exact_count");
  bad = base_config();
  bad.r_values = {0.0};
  expect_message(bad, "r_values");
  bad = base_config();
  bad.b_values = {-1.0};
  expect_message(bad, "b_values");
  bad = base_config();
  bad.window.half_width = 0.0;
  expect_message(bad, "window");
}

TEST_CASE("config json round trips and rejects unknown fields") {
  ExperimentConfig cfg = base_config();
  cfg.kind = graphs::GraphKind::rng;
  cfg.exact_count = 500;
  cfg.n_values = {25.0, 50.0};
  cfg.separations = {0.0, 5.0};
  cfg.radii = {20.0, 40.0};
  cfg.r_values = {5.0, 10.0};
  cfg.b_values = {0.5};
  cfg.start_region = {{2, -3}, 4, 5};

  std::string text = experiments::config_to_json(cfg);
  ExperimentConfig back = experiments::config_from_json(text);
  CHECK(experiments::config_to_json(back) == text);
  CHECK(back.kind == graphs::GraphKind::rng);
  CHECK(back.exact_count == 500);
  CHECK(back.n_values == cfg.n_values);
  CHECK(back.start_region.center.x == 2.0);

  CHECK_THROWS_AS(experiments::config_from_json("{\"intennsity\": 2}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(experiments::config_from_json("{\"kind\": \"grid\"}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(experiments::config_from_json("not json"),
                  std::invalid_argument);
  // Omitted fields keep their defaults.
  ExperimentConfig sparse = experiments::config_from_json("{\"intensity\": 2}");
  CHECK(sparse.intensity == 2.0);
  CHECK(sparse.replicates == 1);
}

TEST_CASE("thread count does not change any estimate") {
  ExperimentConfig cfg = base_config();
  cfg.replicates = 6;
  cfg.n_values = {30.0};
  StatRows serial = estimate_time_constant(cfg, cfg.n_values);
  ExperimentConfig threaded = cfg;
  threaded.threads = 3;
  CHECK(rows_equal(serial, estimate_time_constant(threaded, cfg.n_values)));

  cfg.r_values = {8.0};
  ExperimentConfig threaded2 = cfg;
  threaded2.threads = 4;
  CHECK(rows_equal(sublinearity_experiment(cfg, cfg.r_values),
                   sublinearity_experiment(threaded2, cfg.r_values)));
}

TEST_CASE("repeat runs are byte identical") {
  ExperimentConfig cfg = base_config();
  cfg.replicates = 3;
  StatRows a = coalescence_experiment(cfg, {2.0}, {25.0});
  StatRows b = coalescence_experiment(cfg, {2.0}, {25.0});
  CHECK(rows_equal(a, b));
}

TEST_CASE("time constant rows respect the chord bound") {
  ExperimentConfig cfg = base_config();
  cfg.replicates = 2;
  cfg.n_values = {20.0, 40.0};
  StatRows rows = estimate_time_constant(cfg, cfg.n_values);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.statistic == "time_constant");
    REQUIRE(row.params.size() == 1);
    CHECK(row.params[0].first == "n");
    CHECK(row.replicates == cfg.replicates);
    CHECK(row.excluded == 0);
    // Graph length over the chord never beats the chord itself; the ratio
    // estimate uses n, so allow the endpoint snap to the nearest vertex.
    CHECK(row.estimate > 0.8);
    CHECK(row.estimate < 2.0);
  }
  // Ratios at distinct n on the same replicates differ.
  CHECK(rows[0].estimate != rows[1].estimate);
}

TEST_CASE("single replicate chord bound holds per run") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    ExperimentConfig cfg = base_config();
    cfg.master_seed = seed;
    cfg.replicates = 1;
    cfg.n_values = {35.0};
    StatRows rows = estimate_time_constant(cfg, cfg.n_values);
    REQUIRE(rows.size() == 1);
    if (rows[0].excluded == 1) continue;
    // The sampled endpoints sit within one typical spacing of o and n*e1,
    // so the normalized graph distance cannot drop far below 1.
    CHECK(rows[0].estimate >= 1.0 - 0.2);
    CHECK(rows[0].std_error == 0.0);
  }
}

TEST_CASE("spanner ratio is at least 1 and delaunay only") {
  ExperimentConfig cfg = base_config();
  cfg.window = {{0, 0}, 30, 30};
  cfg.replicates = 2;
  double ratio = experiments::spanner_check(cfg);
  CHECK(ratio >= 1.0);
  CHECK(ratio < 2.4184);

  ExperimentConfig bad = cfg;
  bad.kind = graphs::GraphKind::rng;
  CHECK_THROWS_AS(experiments::spanner_check(bad), std::invalid_argument);
}

TEST_CASE("coincident coalescence sources always merge") {
  ExperimentConfig cfg = base_config();
  cfg.replicates = 5;
  StatRows rows = coalescence_experiment(cfg, {0.0}, {30.0});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].statistic == "genuine_fraction");
  CHECK(rows[0].estimate == 1.0);
  CHECK(rows[0].params ==
        std::vector<std::pair<std::string, double>>{{"separation", 0.0},
                                                    {"R", 30.0}});
  CHECK(rows[1].statistic == "cone_fraction");
  CHECK(rows[1].estimate >= 0.0);
  CHECK(rows[1].estimate <= 1.0);
}

TEST_CASE("sublinearity rows report exact additivity") {
  ExperimentConfig cfg = base_config();
  cfg.replicates = 3;
  cfg.r_values = {6.0, 12.0};
  cfg.arc_partition = 5;
  StatRows rows = sublinearity_experiment(cfg, cfg.r_values);
  REQUIRE(rows.size() == 8);  // four statistics per r
  for (size_t i = 0; i < rows.size(); i += 4) {
    CHECK(rows[i].statistic == "chi_over_r");
    CHECK(rows[i].estimate >= 0.0);
    CHECK(rows[i + 1].statistic == "chi_dir");
    CHECK(rows[i + 2].statistic == "partition_gap_max");
    CHECK(rows[i + 2].estimate == 0.0);
    CHECK(rows[i + 3].statistic == "dir_violations");
    CHECK(rows[i + 3].estimate == 0.0);
  }
  // r beyond the observation disk is rejected.
  ExperimentConfig bad = cfg;
  bad.r_values = {200.0};
  CHECK_THROWS_AS(sublinearity_experiment(bad, bad.r_values),
                  std::invalid_argument);
}

TEST_CASE("chain rows stay exact at small b") {
  ExperimentConfig cfg = base_config();
  cfg.window = {{0, 0}, 40, 40};
  cfg.replicates = 3;
  cfg.b_values = {0.8};
  cfg.start_region = {{0, 0}, 5, 5};
  StatRows rows = chains_experiment(cfg, cfg.b_values);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].statistic == "max_chain_length");
  CHECK(rows[0].estimate >= 1.0);
  CHECK(rows[1].statistic == "exact_fraction");
  CHECK(rows[1].estimate == 1.0);
}
