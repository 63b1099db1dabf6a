#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpplab/chains.hpp"
#include "fpplab/chi.hpp"
#include "fpplab/directed_forest.hpp"

namespace fpplab::experiments {

// One knob bag for every experiment; each runner reads the fields it needs.
// All randomness derives from master_seed: replicate k samples points from
// stream 2k and draws auxiliary choices from stream 2k+1.
struct ExperimentConfig {
  graphs::GraphKind kind = graphs::GraphKind::delaunay;
  geom::Window window{{0.0, 0.0}, 100.0, 100.0};
  double intensity = 1.0;
  std::uint64_t master_seed = 1;
  int replicates = 1;
  int threads = 1;
  double margin_fraction = 0.1;     // observation-region buffer per side
  std::optional<int> exact_count;   // fixed count instead of a Poisson draw

  std::vector<double> n_values{100.0};    // time constant: e1 distances
  int spanner_sources = 8;                // spanner: probe sources per replicate
  int spanner_targets = 8;                // spanner: targets per source
  std::vector<double> separations{10.0};  // coalescence: source separations
  std::vector<double> radii{50.0};        // coalescence: target radii
  double cone_half_angle = 0.35;          // coalescence: direction cone (rad)
  std::vector<double> r_values{20.0};     // sublinearity: truncation radii
  double r_obs = 0.0;                     // 0 picks 0.9 * min half extent
  int arc_partition = 8;                  // sublinearity: additivity arcs
  std::vector<double> b_values{1.0};      // chains: step bounds
  geom::Window start_region{{0.0, 0.0}, 10.0, 10.0};  // chains: start box
};

void validate(const ExperimentConfig& cfg);

// Strict JSON I/O: unknown fields throw, omitted fields keep defaults,
// serialization round-trips exactly.
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);

struct StatRow {
  std::string statistic;
  std::vector<std::pair<std::string, double>> params;
  double estimate = 0.0;
  double std_error = 0.0;
  int replicates = 0;
  int excluded = 0;
};
using StatRows = std::vector<StatRow>;

// Mean and stderr of graph_distance(q(o), q(n*e1)) / n per n. Replicates
// with an unreachable endpoint are excluded and counted in the rows.
StatRows estimate_time_constant(const ExperimentConfig& cfg,
                                const std::vector<double>& n_values);

// Largest graph/Euclidean distance ratio over sampled pairs of vertices in
// the observation region. Delaunay only.
double spanner_check(const ExperimentConfig& cfg);

// Fraction of source pairs at each (separation, R) whose chains toward
// q(R*e1) merge within radius R/2, plus the fraction of geodesic vertices
// inside the forward cone of half angle cone_half_angle (descriptive).
StatRows coalescence_experiment(const ExperimentConfig& cfg,
                                const std::vector<double>& separations,
                                const std::vector<double>& radii);

// Per r: mean chi_r / r, mean directional count at arc length 2*pi (whose
// r-scaled mean matches chi_r in expectation by isotropy), the worst
// arc-partition additivity gap, and the count of directional counts
// exceeding chi_r (both should be exactly zero).
StatRows sublinearity_experiment(const ExperimentConfig& cfg,
                                 const std::vector<double>& r_values);

// Mean longest descending chain from start_region per step bound b, with
// the fraction of replicates searched exhaustively.
StatRows chains_experiment(const ExperimentConfig& cfg,
                           const std::vector<double>& b_values);

}  // namespace fpplab::experiments
