#pragma once

#include <optional>
#include <string>

#include "fpplab/experiments.hpp"

namespace fpplab::io {

// All writers are deterministic: same values, same bytes. Coordinates and
// lengths are printed with 17 significant digits so doubles round-trip.

// CSV with header id,x,y; ids are 0..n-1 in point order.
void write_points_csv(const std::string& path, const geom::PointSet& ps);

// Reads the format above; ids must be 0..n-1 in order. Malformed input
// throws std::runtime_error naming the offending line. Without an explicit
// window, a bounding box with a hair of padding is used.
geom::PointSet read_points_csv(const std::string& path);
geom::PointSet read_points_csv(const std::string& path,
                               const geom::Window& window);

// CSV with header i,j,length; i<j, rows sorted lexicographically.
void write_edges_csv(const std::string& path, const graphs::ProximityGraph& g);

// CSV with header vertex,parent,dist; parent -1 at the root and for
// unreached vertices (their dist prints as inf).
void write_tree_csv(const std::string& path, const fpp::ShortestPathTree& tree);

// CSV with header vertex,successor; successor -1 for none.
void write_forest_csv(const std::string& path, const forest::DirectedForest& f);

// JSON object {source, target, vertices, length, restricted, barrier};
// length and vertices are null/empty when no path was found.
std::string path_json(const fpp::GeodesicPath& p);
void write_path_json(const std::string& path, const fpp::GeodesicPath& p);

// CSV: statistic, one column per parameter, estimate, stderr, and the
// trailing replicates,excluded,master_seed columns. All rows of one table
// must share the same parameter names.
void write_stat_rows_csv(const std::string& path,
                         const experiments::StatRows& rows,
                         std::uint64_t master_seed);

// JSON mirror {config: {...}, rows: [...]}.
std::string stat_rows_json(const experiments::StatRows& rows,
                           const experiments::ExperimentConfig& cfg);
void write_stat_rows_json(const std::string& path,
                          const experiments::StatRows& rows,
                          const experiments::ExperimentConfig& cfg);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fpplab::io
