#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fpplab/directed_forest.hpp"
#include "fpplab/io.hpp"
#include "fpplab/manifest.hpp"
#include "fpplab/proximity_graph.hpp"
#include "fpplab/shortest_paths.hpp"
#include "fpplab/svg.hpp"

using nlohmann::json;
using namespace fpplab;

namespace {

struct Common {
  std::uint64_t seed = 1;
  std::string config_path;
  std::string out_dir = ".";
  int threads = 0;  // 0: all available cores
  std::string format = "csv";
};

// "WxH" -> full extents; the window is centered unless --center says otherwise.
geom::Window parse_window(const std::string& spec, geom::Point2 center) {
  double w = 0.0, h = 0.0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%lfx%lf%c", &w, &h, &tail) != 2 || w <= 0.0 ||
      h <= 0.0)
    throw std::invalid_argument("--window: expected WxH with positive extents, got '" +
                                spec + "'");
  return {center, w / 2.0, h / 2.0};
}

geom::Point2 parse_point(const std::string& spec, const std::string& flag) {
  double x = 0.0, y = 0.0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%lf,%lf%c", &x, &y, &tail) != 2)
    throw std::invalid_argument(flag + ": expected X,Y, got '" + spec + "'");
  return {x, y};
}

std::string joined(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

void emit_manifest(const Common& c, const std::string& name,
                   const std::string& cmd, const json& config,
                   const std::vector<std::string>& outputs) {
  io::RunManifest m;
  m.tool_version = io::tool_version();
  m.command = cmd;
  m.config_json = config.dump(2);
  m.master_seed = c.seed;
  io::add_outputs(m, outputs);
  io::write_manifest(joined(c.out_dir, name + ".manifest.json"), m);
}

std::shared_ptr<geom::PointSet> load_points(const std::string& path,
                                            const std::string& window_spec,
                                            const std::string& center_spec) {
  if (!window_spec.empty()) {
    geom::Point2 ctr{0.0, 0.0};
    if (!center_spec.empty()) ctr = parse_point(center_spec, "--center");
    return std::make_shared<geom::PointSet>(
        io::read_points_csv(path, parse_window(window_spec, ctr)));
  }
  return std::make_shared<geom::PointSet>(io::read_points_csv(path));
}

graphs::ProximityGraph build_kind(std::shared_ptr<const geom::PointSet> ps,
                                  const std::string& kind) {
  if (kind == "delaunay") return graphs::build_delaunay(std::move(ps));
  if (kind == "rng") return graphs::build_rng(std::move(ps));
  throw std::invalid_argument("--kind: expected delaunay or rng, got '" + kind + "'");
}

json window_json(const geom::Window& w) {
  return json{{"center", {w.center.x, w.center.y}},
              {"half_extents", {w.half_width, w.half_height}}};
}

experiments::ExperimentConfig resolve_config(const Common& c, const CLI::App* sub,
                                             const std::string& kind,
                                             int replicates, double intensity) {
  experiments::ExperimentConfig cfg;
  if (!c.config_path.empty())
    cfg = experiments::config_from_json(io::read_text_file(c.config_path));
  cfg.master_seed = c.seed;
  if (c.threads > 0)
    cfg.threads = c.threads;
  else if (cfg.threads == 0)
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  if (sub->count("--kind"))
    cfg.kind = kind == "rng" ? graphs::GraphKind::rng : graphs::GraphKind::delaunay;
  if (sub->count("--replicates")) cfg.replicates = replicates;
  if (sub->count("--intensity")) cfg.intensity = intensity;
  experiments::validate(cfg);
  return cfg;
}

int run(int argc, char** argv) {
  CLI::App app{"first-passage percolation laboratory on Poisson proximity graphs"};
  app.require_subcommand(1);

  Common c;
  app.add_option("--seed", c.seed, "master seed for all randomness");
  app.add_option("--config", c.config_path, "JSON config file (flags override)");
  app.add_option("--out-dir", c.out_dir, "directory for outputs")
      ->capture_default_str();
  app.add_option("--threads", c.threads,
                 "worker threads for experiments (0: all cores)");
  app.add_option("--format", c.format, "result table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // sample
  auto* sample = app.add_subcommand("sample", "draw a Poisson point sample");
  sample->fallthrough();
  std::string window_spec = "100x100", center_spec;
  double intensity = 1.0;
  int exact_count = -1;
  std::string out_override;
  sample->add_option("--window", window_spec, "window extents WxH")
      ->capture_default_str();
  sample->add_option("--center", center_spec, "window center X,Y (default 0,0)");
  sample->add_option("--intensity", intensity, "points per unit area")
      ->capture_default_str();
  sample->add_option("--count", exact_count,
                     "draw exactly this many points instead of Poisson");
  sample->add_option("--out", out_override, "output CSV (default points.csv)");

  // build
  auto* build = app.add_subcommand("build", "build a proximity graph from points");
  build->fallthrough();
  std::string points_path, kind = "delaunay";
  build->add_option("--points", points_path, "input point CSV")->required();
  build->add_option("--kind", kind, "delaunay or rng")->capture_default_str();
  build->add_option("--window", window_spec, "window extents WxH (default: bounding box)");
  build->add_option("--center", center_spec, "window center X,Y");
  build->add_option("--out", out_override, "output CSV (default edges.csv)");

  // geodesic
  auto* geodesic = app.add_subcommand("geodesic", "shortest path between two vertices");
  geodesic->fallthrough();
  int source = 0, target = 0;
  std::optional<double> barrier;
  geodesic->add_option("--points", points_path, "input point CSV")->required();
  geodesic->add_option("--kind", kind, "delaunay or rng")->capture_default_str();
  geodesic->add_option("--source", source, "source vertex id")->required();
  geodesic->add_option("--target", target, "target vertex id")->required();
  geodesic->add_option("--barrier", barrier,
                       "restrict to paths never stepping right-to-left across x=VALUE");
  geodesic->add_option("--window", window_spec, "window extents WxH (default: bounding box)");
  geodesic->add_option("--center", center_spec, "window center X,Y");
  geodesic->add_option("--out", out_override, "output JSON (default path.json)");

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "shortest-path tree from a root");
  tree_cmd->fallthrough();
  int root = 0;
  tree_cmd->add_option("--points", points_path, "input point CSV")->required();
  tree_cmd->add_option("--kind", kind, "delaunay or rng")->capture_default_str();
  tree_cmd->add_option("--root", root, "root vertex id")->required();
  tree_cmd->add_option("--barrier", barrier,
                       "restrict to paths never stepping right-to-left across x=VALUE");
  tree_cmd->add_option("--window", window_spec, "window extents WxH (default: bounding box)");
  tree_cmd->add_option("--center", center_spec, "window center X,Y");
  tree_cmd->add_option("--out", out_override, "output CSV (default tree.csv)");

  // forest
  auto* forest_cmd =
      app.add_subcommand("forest", "directed geodesic forest toward a distant target");
  forest_cmd->fallthrough();
  std::string direction_spec = "1,0";
  double radius = 0.0;
  forest_cmd->add_option("--points", points_path, "input point CSV")->required();
  forest_cmd->add_option("--kind", kind, "delaunay or rng")->capture_default_str();
  forest_cmd->add_option("--direction", direction_spec, "direction X,Y (normalized)")
      ->capture_default_str();
  forest_cmd->add_option("--radius", radius,
                         "target distance R (default: half the smaller half-extent)");
  forest_cmd->add_option("--window", window_spec, "window extents WxH (default: bounding box)");
  forest_cmd->add_option("--center", center_spec, "window center X,Y");
  forest_cmd->add_option("--out", out_override, "output CSV (default forest.csv)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "run a Monte Carlo experiment");
  experiment->fallthrough();
  experiment->require_subcommand(1);
  int replicates = 0;
  double cfg_intensity = 0.0;
  for (const char* name :
       {"time-constant", "spanner", "coalescence", "sublinearity", "chains"}) {
    auto* s = experiment->add_subcommand(name);
    s->fallthrough();
    s->add_option("--kind", kind, "delaunay or rng");
    s->add_option("--replicates", replicates, "override replicate count");
    s->add_option("--intensity", cfg_intensity, "override intensity");
  }

  // render
  auto* render_cmd = app.add_subcommand("render", "draw points and overlays to SVG");
  render_cmd->fallthrough();
  std::string edges_path, path_path, tree_path, forest_path;
  std::vector<std::string> circle_specs, arc_specs;
  double width_px = 800.0;
  render_cmd->add_option("--points", points_path, "input point CSV")->required();
  render_cmd->add_option("--edges", edges_path, "edge CSV overlay");
  render_cmd->add_option("--path", path_path, "geodesic JSON overlay");
  render_cmd->add_option("--tree", tree_path, "tree CSV overlay");
  render_cmd->add_option("--forest", forest_path, "forest CSV overlay");
  render_cmd->add_option("--circle", circle_specs, "circle X,Y,R (repeatable)");
  render_cmd->add_option("--arc", arc_specs,
                         "arc X,Y,R,THETA0,THETA1 counterclockwise (repeatable)");
  render_cmd->add_option("--barrier", barrier, "dashed vertical line at x=VALUE");
  render_cmd->add_option("--width", width_px, "image width in pixels")
      ->capture_default_str();
  render_cmd->add_option("--window", window_spec, "window extents WxH (default: bounding box)");
  render_cmd->add_option("--center", center_spec, "window center X,Y");
  render_cmd->add_option("--out", out_override, "output SVG (default scene.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
  std::filesystem::create_directories(c.out_dir);
  const std::string cmd = command_line(argc, argv);

  auto out_or = [&](const std::string& fallback) {
    // --out names a file inside --out-dir; an absolute --out wins outright.
    return joined(c.out_dir, out_override.empty() ? fallback : out_override);
  };

  if (*sample) {
    geom::Point2 ctr{0.0, 0.0};
    if (!center_spec.empty()) ctr = parse_point(center_spec, "--center");
    geom::Window w = parse_window(window_spec, ctr);
    geom::PointSet ps =
        exact_count >= 0 ? geom::sample_uniform(w, exact_count, {c.seed, 0})
                         : geom::sample_ppp(w, intensity, {c.seed, 0});
    std::string out = out_or("points.csv");
    io::write_points_csv(out, ps);
    json cfg{{"window", window_json(w)}, {"seed", c.seed}};
    if (exact_count >= 0)
      cfg["count"] = exact_count;
    else
      cfg["intensity"] = intensity;
    emit_manifest(c, "sample", cmd, cfg, {out});
    return 0;
  }

  if (*build) {
    auto ps = load_points(points_path, window_spec, center_spec);
    auto g = build_kind(ps, kind);
    std::string out = out_or("edges.csv");
    io::write_edges_csv(out, g);
    json cfg{{"points", points_path},
             {"kind", kind},
             {"window", window_json(ps->window)}};
    emit_manifest(c, "build", cmd, cfg, {out});
    return 0;
  }

  if (*geodesic) {
    auto ps = load_points(points_path, window_spec, center_spec);
    auto g = build_kind(ps, kind);
    int n = (int)ps->points.size();
    if (source < 0 || source >= n || target < 0 || target >= n)
      throw std::invalid_argument("--source/--target: vertex id out of range");
    fpp::GeodesicPath p =
        barrier ? fpp::restricted_shortest_path(g, source, target,
                                                fpp::Barrier{*barrier})
                : fpp::shortest_path(g, source, target);
    std::string out = out_or("path.json");
    io::write_path_json(out, p);
    json cfg{{"points", points_path}, {"kind", kind},
             {"source", source},      {"target", target},
             {"barrier", barrier ? json(*barrier) : json(nullptr)}};
    emit_manifest(c, "geodesic", cmd, cfg, {out});
    return 0;
  }

  if (*tree_cmd) {
    auto ps = load_points(points_path, window_spec, center_spec);
    auto g = build_kind(ps, kind);
    if (root < 0 || root >= (int)ps->points.size())
      throw std::invalid_argument("--root: vertex id out of range");
    fpp::ShortestPathTree t =
        barrier ? fpp::restricted_tree(g, root, fpp::Barrier{*barrier})
                : fpp::shortest_path_tree(g, root);
    std::string out = out_or("tree.csv");
    io::write_tree_csv(out, t);
    json cfg{{"points", points_path}, {"kind", kind}, {"root", root},
             {"barrier", barrier ? json(*barrier) : json(nullptr)}};
    emit_manifest(c, "tree", cmd, cfg, {out});
    return 0;
  }

  if (*forest_cmd) {
    auto ps = load_points(points_path, window_spec, center_spec);
    auto g = build_kind(ps, kind);
    geom::Point2 d = parse_point(direction_spec, "--direction");
    double len = geom::norm(d);
    if (!(len > 0.0))
      throw std::invalid_argument("--direction: zero vector");
    if (radius <= 0.0)
      radius = 0.5 * std::min(ps->window.half_width, ps->window.half_height);
    forest::DirectionSpec spec{{d.x / len, d.y / len}, radius};
    forest::DirectedForest f = forest::build_directed_forest(g, spec);
    std::string out = out_or("forest.csv");
    io::write_forest_csv(out, f);
    json cfg{{"points", points_path},
             {"kind", kind},
             {"direction", {spec.u.x, spec.u.y}},
             {"radius", radius}};
    emit_manifest(c, "forest", cmd, cfg, {out});
    return 0;
  }

  if (*experiment) {
    const CLI::App* sub = experiment->get_subcommands().front();
    experiments::ExperimentConfig cfg =
        resolve_config(c, sub, kind, replicates, cfg_intensity);
    experiments::StatRows rows;
    const std::string name = sub->get_name();
    if (name == "time-constant") {
      rows = experiments::estimate_time_constant(cfg, cfg.n_values);
    } else if (name == "spanner") {
      double ratio = experiments::spanner_check(cfg);
      rows.push_back({"spanner_max_ratio", {}, ratio, 0.0, cfg.replicates, 0});
    } else if (name == "coalescence") {
      rows = experiments::coalescence_experiment(cfg, cfg.separations, cfg.radii);
    } else if (name == "sublinearity") {
      rows = experiments::sublinearity_experiment(cfg, cfg.r_values);
    } else {
      rows = experiments::chains_experiment(cfg, cfg.b_values);
    }
    std::vector<std::string> outputs;
    if (c.format == "csv") {
      std::string out = joined(c.out_dir, "results.csv");
      io::write_stat_rows_csv(out, rows, cfg.master_seed);
      outputs.push_back(out);
    }
    std::string out_json = joined(c.out_dir, "results.json");
    io::write_stat_rows_json(out_json, rows, cfg);
    outputs.push_back(out_json);
    emit_manifest(c, "experiment-" + name, cmd,
                  json::parse(experiments::config_to_json(cfg)), outputs);
    return 0;
  }

  // render
  auto ps = load_points(points_path, window_spec, center_spec);
  render::SvgScene scene(ps->window, width_px);
  if (!edges_path.empty()) {
    std::vector<graphs::Edge> edges;
    std::string text = io::read_text_file(edges_path);
    size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      std::string line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (line_no == 1 || line.empty()) continue;
      long i = 0, j = 0;
      double len = 0.0;
      char tail = 0;
      if (std::sscanf(line.c_str(), "%ld,%ld,%lf%c", &i, &j, &len, &tail) != 3)
        throw std::runtime_error(edges_path + " line " + std::to_string(line_no) +
                                 ": expected i,j,length");
      edges.push_back({(int)i, (int)j, len});
    }
    scene.add_edges(*ps, edges);
  }
  auto read_link_column = [&](const std::string& file) {
    std::vector<int> link(ps->points.size(), -1);
    std::string text = io::read_text_file(file);
    size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      std::string line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (line_no == 1 || line.empty()) continue;
      long v = 0, p = 0;
      if (std::sscanf(line.c_str(), "%ld,%ld", &v, &p) != 2 || v < 0 ||
          v >= (long)link.size())
        throw std::runtime_error(file + " line " + std::to_string(line_no) +
                                 ": expected vertex,link");
      link[v] = (int)p;
    }
    return link;
  };
  if (!tree_path.empty()) scene.add_links(*ps, read_link_column(tree_path));
  if (!forest_path.empty()) scene.add_links(*ps, read_link_column(forest_path));
  if (!path_path.empty()) {
    json pj = json::parse(io::read_text_file(path_path));
    std::vector<int> verts = pj.at("vertices").get<std::vector<int>>();
    for (int v : verts)
      if (v < 0 || v >= (int)ps->points.size())
        throw std::runtime_error(path_path + ": vertex id out of range");
    scene.add_path(*ps, verts);
  }
  scene.add_points(*ps);
  for (const auto& spec : circle_specs) {
    double x = 0.0, y = 0.0, r = 0.0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf,%lf,%lf%c", &x, &y, &r, &tail) != 3 ||
        r <= 0.0)
      throw std::invalid_argument("--circle: expected X,Y,R, got '" + spec + "'");
    scene.add_circle({x, y}, r);
  }
  for (const auto& spec : arc_specs) {
    double x = 0.0, y = 0.0, r = 0.0, t0 = 0.0, t1 = 0.0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf,%lf%c", &x, &y, &r, &t0, &t1,
                    &tail) != 5 ||
        r <= 0.0)
      throw std::invalid_argument("--arc: expected X,Y,R,THETA0,THETA1, got '" +
                                  spec + "'");
    scene.add_arc({x, y}, r, t0, t1);
  }
  if (barrier) scene.add_vertical_line(*barrier);
  std::string out = out_or("scene.svg");
  render::write_svg(out, scene);
  json cfg{{"points", points_path}, {"width", width_px}};
  emit_manifest(c, "render", cmd, cfg, {out});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
