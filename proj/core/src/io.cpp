#include "fpplab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace fpplab::io {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_or_throw(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

[[noreturn]] void bad_line(const std::string& path, size_t line,
                           const std::string& what) {
  throw std::runtime_error(path + " line " + std::to_string(line) + ": " + what);
}

// Strips one trailing carriage return so Windows-edited files still load.
std::string chomp(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::vector<geom::Point2> parse_points(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  size_t lineno = 1;
  if (!std::getline(in, line) || chomp(line) != "id,x,y") {
    bad_line(path, 1, "expected header id,x,y");
  }
  std::vector<geom::Point2> pts;
  while (std::getline(in, line)) {
    ++lineno;
    line = chomp(line);
    if (line.empty()) continue;
    long id;
    double x, y;
    char tail;
    int got = std::sscanf(line.c_str(), "%ld,%lf,%lf%c", &id, &x, &y, &tail);
    if (got != 3) bad_line(path, lineno, "expected id,x,y");
    if (id != static_cast<long>(pts.size())) {
      bad_line(path, lineno, "ids must run 0..n-1 in order");
    }
    if (!std::isfinite(x) || !std::isfinite(y)) {
      bad_line(path, lineno, "coordinates must be finite");
    }
    pts.push_back({x, y});
  }
  return pts;
}

geom::Window bounding_window(const std::vector<geom::Point2>& pts) {
  if (pts.empty()) return geom::Window{{0.0, 0.0}, 1.0, 1.0};
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  geom::Point2 center{(xmin + xmax) / 2.0, (ymin + ymax) / 2.0};
  // Pad so rounding in the center computation cannot evict extreme points.
  double hw = (xmax - xmin) / 2.0;
  double hh = (ymax - ymin) / 2.0;
  hw += 1e-9 * (1.0 + hw + std::abs(center.x));
  hh += 1e-9 * (1.0 + hh + std::abs(center.y));
  return geom::Window{center, hw, hh};
}

}  // namespace

void write_points_csv(const std::string& path, const geom::PointSet& ps) {
  std::string out = "id,x,y\n";
  for (int i = 0; i < ps.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += fmt17(ps[i].x);
    out += ',';
    out += fmt17(ps[i].y);
    out += '\n';
  }
  write_or_throw(path, out);
}

geom::PointSet read_points_csv(const std::string& path) {
  auto pts = parse_points(path);
  geom::Window window = bounding_window(pts);
  return geom::make_point_set(std::move(pts), window);
}

geom::PointSet read_points_csv(const std::string& path,
                               const geom::Window& window) {
  return geom::make_point_set(parse_points(path), window);
}

void write_edges_csv(const std::string& path, const graphs::ProximityGraph& g) {
  std::string out = "i,j,length\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.i);
    out += ',';
    out += std::to_string(e.j);
    out += ',';
    out += fmt17(e.length);
    out += '\n';
  }
  write_or_throw(path, out);
}

void write_tree_csv(const std::string& path, const fpp::ShortestPathTree& tree) {
  std::string out = "vertex,parent,dist\n";
  for (size_t v = 0; v < tree.parent.size(); ++v) {
    out += std::to_string(v);
    out += ',';
    out += std::to_string(tree.parent[v]);
    out += ',';
    out += fmt17(tree.dist[v]);
    out += '\n';
  }
  write_or_throw(path, out);
}

void write_forest_csv(const std::string& path, const forest::DirectedForest& f) {
  std::string out = "vertex,successor\n";
  for (size_t v = 0; v < f.successor.size(); ++v) {
    out += std::to_string(v);
    out += ',';
    out += std::to_string(f.successor[v]);
    out += '\n';
  }
  write_or_throw(path, out);
}

std::string path_json(const fpp::GeodesicPath& p) {
  json j;
  j["source"] = p.source;
  j["target"] = p.target;
  j["vertices"] = p.vertices;
  j["length"] = p.found ? json(p.length) : json(nullptr);
  j["restricted"] = p.barrier.has_value();
  j["barrier"] = p.barrier ? json(*p.barrier) : json(nullptr);
  return j.dump(2) + "\n";
}

void write_path_json(const std::string& path, const fpp::GeodesicPath& p) {
  write_or_throw(path, path_json(p));
}

void write_stat_rows_csv(const std::string& path,
                         const experiments::StatRows& rows,
                         std::uint64_t master_seed) {
  std::string out = "statistic";
  std::vector<std::pair<std::string, double>> names;
  if (!rows.empty()) names = rows.front().params;
  for (const auto& [name, value] : names) out += "," + name;
  out += ",estimate,stderr,replicates,excluded,master_seed\n";
  for (const auto& row : rows) {
    if (row.params.size() != names.size()) {
      throw std::invalid_argument("stat rows must share parameter names");
    }
    for (size_t i = 0; i < names.size(); ++i) {
      if (row.params[i].first != names[i].first) {
        throw std::invalid_argument("stat rows must share parameter names");
      }
    }
    out += row.statistic;
    for (const auto& [name, value] : row.params) out += "," + fmt17(value);
    out += "," + fmt17(row.estimate);
    out += "," + fmt17(row.std_error);
    out += "," + std::to_string(row.replicates);
    out += "," + std::to_string(row.excluded);
    out += "," + std::to_string(master_seed);
    out += '\n';
  }
  write_or_throw(path, out);
}

std::string stat_rows_json(const experiments::StatRows& rows,
                           const experiments::ExperimentConfig& cfg) {
  json j;
  j["config"] = json::parse(experiments::config_to_json(cfg));
  json out_rows = json::array();
  for (const auto& row : rows) {
    json r;
    r["statistic"] = row.statistic;
    json params;
    for (const auto& [name, value] : row.params) params[name] = value;
    r["params"] = params;
    r["estimate"] = row.estimate;
    r["stderr"] = row.std_error;
    r["replicates"] = row.replicates;
    r["excluded"] = row.excluded;
    out_rows.push_back(std::move(r));
  }
  j["rows"] = std::move(out_rows);
  return j.dump(2) + "\n";
}

void write_stat_rows_json(const std::string& path,
                          const experiments::StatRows& rows,
                          const experiments::ExperimentConfig& cfg) {
  write_or_throw(path, stat_rows_json(rows, cfg));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  write_or_throw(path, text);
}

}  // namespace fpplab::io
