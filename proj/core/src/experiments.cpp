#include "fpplab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace fpplab::experiments {

using geom::Point2;
using geom::Window;
using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Window observation_region(const ExperimentConfig& cfg) {
  double margin = cfg.margin_fraction *
                  std::min(cfg.window.half_width, cfg.window.half_height);
  return cfg.window.shrunk(margin);
}

std::shared_ptr<const geom::PointSet> sample_points(const ExperimentConfig& cfg,
                                                    int replicate) {
  geom::SeedStream stream{cfg.master_seed, 2ull * static_cast<unsigned>(replicate)};
  if (cfg.exact_count) {
    return std::make_shared<geom::PointSet>(
        geom::sample_uniform(cfg.window, *cfg.exact_count, stream));
  }
  return std::make_shared<geom::PointSet>(
      geom::sample_ppp(cfg.window, cfg.intensity, stream));
}

geom::RandomEngine aux_engine(const ExperimentConfig& cfg, int replicate) {
  return geom::RandomEngine(
      {cfg.master_seed, 2ull * static_cast<unsigned>(replicate) + 1ull});
}

graphs::ProximityGraph build_graph(const ExperimentConfig& cfg,
                                   std::shared_ptr<const geom::PointSet> ps) {
  return cfg.kind == graphs::GraphKind::delaunay ? graphs::build_delaunay(ps)
                                                 : graphs::build_rng(ps);
}

// Runs fn(0..replicates-1), spreading across threads; results land in
// caller-owned per-replicate slots, so aggregation order stays fixed.
void for_each_replicate(int replicates, int threads,
                        const std::function<void(int)>& fn) {
  int workers = std::min(std::max(threads, 1), replicates);
  if (workers <= 1) {
    for (int i = 0; i < replicates; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= replicates) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Accum {
  double sum = 0.0, sum2 = 0.0;
  int n = 0;
  void add(double x) {
    sum += x;
    sum2 += x * x;
    ++n;
  }
  double mean() const { return n > 0 ? sum / n : 0.0; }
  double stderr_of_mean() const {
    if (n < 2) return 0.0;
    double var = (sum2 - sum * sum / n) / (n - 1);
    return std::sqrt(std::max(var, 0.0) / n);
  }
};

double binomial_stderr(double fraction, int n) {
  return n > 0 ? std::sqrt(std::max(fraction * (1.0 - fraction), 0.0) / n) : 0.0;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  require(cfg.window.half_width > 0.0 && cfg.window.half_height > 0.0,
          "config: window half extents must be positive");
  require(std::isfinite(cfg.intensity) && cfg.intensity >= 0.0,
          "config: intensity must be finite and >= 0");
  require(cfg.replicates >= 1, "config: replicates must be >= 1");
  require(cfg.threads >= 0, "config: threads must be >= 0");
  require(cfg.margin_fraction >= 0.0 && cfg.margin_fraction < 0.5,
          "config: margin_fraction must lie in [0, 0.5)");
  require(!cfg.exact_count || *cfg.exact_count >= 0,
          "config: exact_count must be >= 0");
  for (double n : cfg.n_values)
    require(std::isfinite(n) && n > 0.0, "config: n_values must be positive");
  require(cfg.spanner_sources >= 1 && cfg.spanner_targets >= 1,
          "config: spanner probe counts must be >= 1");
  for (double s : cfg.separations)
    require(std::isfinite(s) && s >= 0.0, "config: separations must be >= 0");
  for (double r : cfg.radii)
    require(std::isfinite(r) && r > 0.0, "config: radii must be positive");
  require(cfg.cone_half_angle > 0.0 && cfg.cone_half_angle <= std::numbers::pi,
          "config: cone_half_angle must lie in (0, pi]");
  for (double r : cfg.r_values)
    require(std::isfinite(r) && r > 0.0, "config: r_values must be positive");
  require(std::isfinite(cfg.r_obs) && cfg.r_obs >= 0.0,
          "config: r_obs must be >= 0");
  require(cfg.arc_partition >= 1, "config: arc_partition must be >= 1");
  for (double b : cfg.b_values)
    require(std::isfinite(b) && b > 0.0, "config: b_values must be positive");
  require(cfg.start_region.half_width > 0.0 && cfg.start_region.half_height > 0.0,
          "config: start_region half extents must be positive");
}

StatRows estimate_time_constant(const ExperimentConfig& cfg,
                                const std::vector<double>& n_values) {
  validate(cfg);
  require(!n_values.empty(), "time constant: n_values empty");
  Window obs = observation_region(cfg);
  require(obs.contains({0.0, 0.0}), "time constant: origin outside observation region");
  for (double n : n_values) {
    require(std::isfinite(n) && n > 0.0, "time constant: n must be positive");
    require(obs.contains({n, 0.0}),
            "time constant: endpoint outside observation region");
  }
  size_t k = n_values.size();
  // estimates[rep] holds one slot per n, NaN when unreachable.
  std::vector<std::vector<double>> estimates(
      static_cast<size_t>(cfg.replicates),
      std::vector<double>(k, std::numeric_limits<double>::quiet_NaN()));
  for_each_replicate(cfg.replicates, cfg.threads, [&](int rep) {
    auto ps = sample_points(cfg, rep);
    if (ps->size() < 2) return;
    auto g = build_graph(cfg, ps);
    int s = geom::nearest_vertex(*ps, {0.0, 0.0});
    auto tree = fpp::shortest_path_tree(g, s);
    for (size_t i = 0; i < k; ++i) {
      int t = geom::nearest_vertex(*ps, {n_values[i], 0.0});
      if (tree.reached(t)) {
        estimates[static_cast<size_t>(rep)][i] =
            tree.dist[static_cast<size_t>(t)] / n_values[i];
      }
    }
  });
  StatRows rows;
  for (size_t i = 0; i < k; ++i) {
    Accum acc;
    for (int rep = 0; rep < cfg.replicates; ++rep) {
      double e = estimates[static_cast<size_t>(rep)][i];
      if (!std::isnan(e)) acc.add(e);
    }
    rows.push_back({"time_constant",
                    {{"n", n_values[i]}},
                    acc.mean(),
                    acc.stderr_of_mean(),
                    cfg.replicates,
                    cfg.replicates - acc.n});
  }
  return rows;
}

double spanner_check(const ExperimentConfig& cfg) {
  validate(cfg);
  require(cfg.kind == graphs::GraphKind::delaunay,
          "spanner check: Delaunay graphs only");
  Window obs = observation_region(cfg);
  std::vector<double> max_ratio(static_cast<size_t>(cfg.replicates), 1.0);
  for_each_replicate(cfg.replicates, cfg.threads, [&](int rep) {
    auto ps = sample_points(cfg, rep);
    if (ps->size() < 2) return;
    auto g = build_graph(cfg, ps);
    std::vector<int> interior;
    for (int v = 0; v < ps->size(); ++v) {
      if (obs.contains((*ps)[v])) interior.push_back(v);
    }
    if (interior.size() < 2) return;
    auto aux = aux_engine(cfg, rep);
    double best = 1.0;
    for (int si = 0; si < cfg.spanner_sources; ++si) {
      int s = interior[aux.next_u64() % interior.size()];
      auto tree = fpp::shortest_path_tree(g, s);
      for (int ti = 0; ti < cfg.spanner_targets; ++ti) {
        int t = interior[aux.next_u64() % interior.size()];
        if (t == s || !tree.reached(t)) continue;
        double chord = geom::dist((*ps)[s], (*ps)[t]);
        best = std::max(best, tree.dist[static_cast<size_t>(t)] / chord);
      }
    }
    max_ratio[static_cast<size_t>(rep)] = best;
  });
  return *std::max_element(max_ratio.begin(), max_ratio.end());
}

StatRows coalescence_experiment(const ExperimentConfig& cfg,
                                const std::vector<double>& separations,
                                const std::vector<double>& radii) {
  validate(cfg);
  require(!separations.empty() && !radii.empty(),
          "coalescence: separations and radii must be non-empty");
  Window obs = observation_region(cfg);
  for (double sep : separations) {
    require(std::isfinite(sep) && sep >= 0.0, "coalescence: separation must be >= 0");
    require(obs.contains({0.0, sep / 2.0}) && obs.contains({0.0, -sep / 2.0}),
            "coalescence: sources outside observation region");
  }
  for (double r : radii) {
    require(std::isfinite(r) && r > 0.0, "coalescence: R must be positive");
    require(obs.contains({r, 0.0}),
            "coalescence: target radius outside observation region");
  }
  size_t ns = separations.size(), nr = radii.size();
  struct Cell {
    int genuine = 0, included = 0;
    Accum cone;
  };
  std::vector<std::vector<Cell>> cells(
      static_cast<size_t>(cfg.replicates),
      std::vector<Cell>(ns * nr));
  double cone_cos = std::cos(cfg.cone_half_angle);
  for_each_replicate(cfg.replicates, cfg.threads, [&](int rep) {
    auto ps = sample_points(cfg, rep);
    if (ps->size() < 2) return;
    auto g = build_graph(cfg, ps);
    for (size_t j = 0; j < nr; ++j) {
      forest::DirectionSpec d{{1.0, 0.0}, radii[j]};
      int sink = geom::nearest_vertex(*ps, {radii[j], 0.0});
      auto tree = fpp::shortest_path_tree(g, sink);
      for (size_t i = 0; i < ns; ++i) {
        int x = geom::nearest_vertex(*ps, {0.0, separations[i] / 2.0});
        int x2 = geom::nearest_vertex(*ps, {0.0, -separations[i] / 2.0});
        auto rpt = forest::coalescence_in_tree(tree, *ps, x, x2, d);
        Cell& cell = cells[static_cast<size_t>(rep)][i * nr + j];
        if (!rpt.found) continue;
        cell.included = 1;
        cell.genuine = rpt.genuine ? 1 : 0;
        int in_cone = 0, total = 0;
        for (int src : {x, x2}) {
          Point2 apex = (*ps)[src];
          for (int v : tree.path_to(src)) {
            if (v == src) continue;
            Point2 rel = (*ps)[v] - apex;
            ++total;
            if (rel.x >= cone_cos * geom::norm(rel)) ++in_cone;
          }
        }
        if (total > 0) cell.cone.add(static_cast<double>(in_cone) / total);
      }
    }
  });
  StatRows rows;
  for (size_t i = 0; i < ns; ++i) {
    for (size_t j = 0; j < nr; ++j) {
      int genuine = 0, included = 0;
      Accum cone;
      for (int rep = 0; rep < cfg.replicates; ++rep) {
        const Cell& cell = cells[static_cast<size_t>(rep)][i * nr + j];
        genuine += cell.genuine;
        included += cell.included;
        if (cell.cone.n > 0) cone.add(cell.cone.mean());
      }
      double frac = included > 0 ? static_cast<double>(genuine) / included : 0.0;
      std::vector<std::pair<std::string, double>> params{
          {"separation", separations[i]}, {"R", radii[j]}};
      rows.push_back({"genuine_fraction", params, frac,
                      binomial_stderr(frac, included), cfg.replicates,
                      cfg.replicates - included});
      rows.push_back({"cone_fraction", params, cone.mean(), cone.stderr_of_mean(),
                      cfg.replicates, cfg.replicates - cone.n});
    }
  }
  return rows;
}

StatRows sublinearity_experiment(const ExperimentConfig& cfg,
                                 const std::vector<double>& r_values) {
  validate(cfg);
  require(!r_values.empty(), "sublinearity: r_values empty");
  double min_half = std::min(cfg.window.half_width, cfg.window.half_height);
  double r_obs = cfg.r_obs > 0.0 ? cfg.r_obs : 0.9 * min_half;
  require(r_obs <= min_half * (1.0 - cfg.margin_fraction) + 1e-9,
          "sublinearity: observation disk leaves the observation region");
  for (double r : r_values) {
    require(std::isfinite(r) && r > 0.0 && r < r_obs,
            "sublinearity: need 0 < r < R_obs");
    require(r >= 1.0, "sublinearity: arc length 2*pi needs r >= 1");
  }
  size_t k = r_values.size();
  struct Per {
    double chi = 0.0, dir = 0.0, gap = 0.0;
    int violations = 0;
    bool ok = false;
  };
  std::vector<std::vector<Per>> per(static_cast<size_t>(cfg.replicates),
                                    std::vector<Per>(k));
  int arcs = cfg.arc_partition;
  for_each_replicate(cfg.replicates, cfg.threads, [&](int rep) {
    auto ps = sample_points(cfg, rep);
    if (ps->size() < 2) return;
    auto g = build_graph(cfg, ps);
    int root = geom::nearest_vertex(*ps, {0.0, 0.0});
    auto tree = fpp::shortest_path_tree(g, root);
    auto aux = aux_engine(cfg, rep);
    double theta_u = aux.uniform(0.0, kTwoPi);
    double theta_base = aux.uniform(0.0, kTwoPi);
    Point2 u{std::cos(theta_u), std::sin(theta_u)};
    for (size_t i = 0; i < k; ++i) {
      double r = r_values[i];
      Per& slot = per[static_cast<size_t>(rep)][i];
      int chi = chi_r(tree, g, r, r_obs);
      int dir = chi_r_directional(tree, g, r, r_obs, u, kTwoPi);
      int sum = 0;
      int worst = 0;
      for (int a = 0; a < arcs; ++a) {
        double theta = theta_base + (a + 0.5) * kTwoPi / arcs;
        Point2 ua{std::cos(theta), std::sin(theta)};
        int piece = chi_r_directional(tree, g, r, r_obs, ua, kTwoPi * r / arcs);
        sum += piece;
        worst = std::max(worst, piece);
      }
      slot.chi = chi;
      slot.dir = dir;
      slot.gap = std::abs(sum - chi);
      slot.violations = (dir > chi ? 1 : 0) + (worst > chi ? 1 : 0);
      slot.ok = true;
    }
  });
  StatRows rows;
  for (size_t i = 0; i < k; ++i) {
    Accum chi_over_r, dir_raw;
    double gap_max = 0.0;
    int violations = 0, included = 0;
    for (int rep = 0; rep < cfg.replicates; ++rep) {
      const Per& slot = per[static_cast<size_t>(rep)][i];
      if (!slot.ok) continue;
      ++included;
      chi_over_r.add(slot.chi / r_values[i]);
      dir_raw.add(slot.dir);
      gap_max = std::max(gap_max, slot.gap);
      violations += slot.violations;
    }
    std::vector<std::pair<std::string, double>> params{{"r", r_values[i]}};
    int excluded = cfg.replicates - included;
    rows.push_back({"chi_over_r", params, chi_over_r.mean(),
                    chi_over_r.stderr_of_mean(), cfg.replicates, excluded});
    rows.push_back({"chi_dir", params, dir_raw.mean(), dir_raw.stderr_of_mean(),
                    cfg.replicates, excluded});
    rows.push_back({"partition_gap_max", params, gap_max, 0.0, cfg.replicates,
                    excluded});
    rows.push_back({"dir_violations", params, static_cast<double>(violations),
                    0.0, cfg.replicates, excluded});
  }
  return rows;
}

StatRows chains_experiment(const ExperimentConfig& cfg,
                           const std::vector<double>& b_values) {
  validate(cfg);
  require(!b_values.empty(), "chains: b_values empty");
  size_t k = b_values.size();
  struct Per {
    int length = 0;
    bool exact = false, ok = false;
  };
  std::vector<std::vector<Per>> per(static_cast<size_t>(cfg.replicates),
                                    std::vector<Per>(k));
  for_each_replicate(cfg.replicates, cfg.threads, [&](int rep) {
    auto ps = sample_points(cfg, rep);
    bool any_start = false;
    for (int i = 0; i < ps->size() && !any_start; ++i) {
      any_start = cfg.start_region.contains((*ps)[i]);
    }
    if (!any_start) return;
    for (size_t i = 0; i < k; ++i) {
      auto report = descending_chains(*ps, b_values[i], cfg.start_region);
      per[static_cast<size_t>(rep)][i] = {report.max_chain_length, report.exact,
                                          true};
    }
  });
  StatRows rows;
  for (size_t i = 0; i < k; ++i) {
    Accum length;
    int exact = 0, included = 0;
    for (int rep = 0; rep < cfg.replicates; ++rep) {
      const Per& slot = per[static_cast<size_t>(rep)][i];
      if (!slot.ok) continue;
      ++included;
      length.add(slot.length);
      exact += slot.exact ? 1 : 0;
    }
    std::vector<std::pair<std::string, double>> params{{"b", b_values[i]}};
    int excluded = cfg.replicates - included;
    rows.push_back({"max_chain_length", params, length.mean(),
                    length.stderr_of_mean(), cfg.replicates, excluded});
    double exact_frac = included > 0 ? static_cast<double>(exact) / included : 0.0;
    rows.push_back({"exact_fraction", params, exact_frac, 0.0, cfg.replicates,
                    excluded});
  }
  return rows;
}

namespace {

json window_to_json(const Window& w) {
  return json{{"center", {w.center.x, w.center.y}},
              {"half_extents", {w.half_width, w.half_height}}};
}

Window window_from_json(const json& j, const std::string& path) {
  require(j.is_object() && j.contains("center") && j.contains("half_extents"),
          "config: " + path + " needs center and half_extents");
  auto c = j.at("center");
  auto h = j.at("half_extents");
  require(c.is_array() && c.size() == 2 && h.is_array() && h.size() == 2,
          "config: " + path + " center/half_extents must be [x, y]");
  return Window{{c[0].get<double>(), c[1].get<double>()},
                h[0].get<double>(), h[1].get<double>()};
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
  }
  require(j.is_object(), "config: top level must be a JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "kind") {
        std::string kind = value.get<std::string>();
        if (kind == "delaunay") {
          cfg.kind = graphs::GraphKind::delaunay;
        } else if (kind == "rng") {
          cfg.kind = graphs::GraphKind::rng;
        } else {
          throw std::invalid_argument("config: kind must be delaunay or rng");
        }
      } else if (key == "window") {
        cfg.window = window_from_json(value, "window");
      } else if (key == "intensity") {
        cfg.intensity = value.get<double>();
      } else if (key == "master_seed") {
        cfg.master_seed = value.get<std::uint64_t>();
      } else if (key == "replicates") {
        cfg.replicates = value.get<int>();
      } else if (key == "threads") {
        cfg.threads = value.get<int>();
      } else if (key == "margin_fraction") {
        cfg.margin_fraction = value.get<double>();
      } else if (key == "exact_count") {
        if (!value.is_null()) cfg.exact_count = value.get<int>();
      } else if (key == "n_values") {
        cfg.n_values = value.get<std::vector<double>>();
      } else if (key == "spanner_sources") {
        cfg.spanner_sources = value.get<int>();
      } else if (key == "spanner_targets") {
        cfg.spanner_targets = value.get<int>();
      } else if (key == "separations") {
        cfg.separations = value.get<std::vector<double>>();
      } else if (key == "radii") {
        cfg.radii = value.get<std::vector<double>>();
      } else if (key == "cone_half_angle") {
        cfg.cone_half_angle = value.get<double>();
      } else if (key == "r_values") {
        cfg.r_values = value.get<std::vector<double>>();
      } else if (key == "r_obs") {
        cfg.r_obs = value.get<double>();
      } else if (key == "arc_partition") {
        cfg.arc_partition = value.get<int>();
      } else if (key == "b_values") {
        cfg.b_values = value.get<std::vector<double>>();
      } else if (key == "start_region") {
        cfg.start_region = window_from_json(value, "start_region");
      } else {
        throw std::invalid_argument("config: unknown field " + key);
      }
    } catch (const json::exception& e) {
      throw std::invalid_argument("config: field " + key + ": " + e.what());
    }
  }
  validate(cfg);
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["kind"] = cfg.kind == graphs::GraphKind::delaunay ? "delaunay" : "rng";
  j["window"] = window_to_json(cfg.window);
  j["intensity"] = cfg.intensity;
  j["master_seed"] = cfg.master_seed;
  j["replicates"] = cfg.replicates;
  j["threads"] = cfg.threads;
  j["margin_fraction"] = cfg.margin_fraction;
  j["exact_count"] = cfg.exact_count ? json(*cfg.exact_count) : json(nullptr);
  j["n_values"] = cfg.n_values;
  j["spanner_sources"] = cfg.spanner_sources;
  j["spanner_targets"] = cfg.spanner_targets;
  j["separations"] = cfg.separations;
  j["radii"] = cfg.radii;
  j["cone_half_angle"] = cfg.cone_half_angle;
  j["r_values"] = cfg.r_values;
  j["r_obs"] = cfg.r_obs;
  j["arc_partition"] = cfg.arc_partition;
  j["b_values"] = cfg.b_values;
  j["start_region"] = window_to_json(cfg.start_region);
  return j.dump(2);
}

}  // namespace fpplab::experiments
