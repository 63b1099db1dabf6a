#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fpplab::io {

// Provenance record written beside every data output. Data files carry no
// timestamps, so re-running with the manifest's config and seed reproduces
// them digest-identically; only the manifest itself differs.
struct RunManifest {
  std::string tool_version;
  std::string command;      // the invocation, space-joined
  std::string config_json;  // full resolved config as a JSON object string
  std::uint64_t master_seed = 0;
  std::string created_utc;  // ISO 8601, UTC
  std::vector<std::pair<std::string, std::string>> outputs;  // name, sha256
};

std::string tool_version();

// Current UTC wall time as an ISO 8601 string.
std::string utc_now();

// Fills name+digest pairs for the given files (paths keep only basenames).
void add_outputs(RunManifest& m, const std::vector<std::string>& paths);

std::string manifest_json(const RunManifest& m);
void write_manifest(const std::string& path, const RunManifest& m);
RunManifest read_manifest(const std::string& path);

}  // namespace fpplab::io
