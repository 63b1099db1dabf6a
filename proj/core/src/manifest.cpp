#include "fpplab/manifest.hpp"

#include <ctime>
#include <filesystem>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fpplab/io.hpp"
#include "fpplab/sha256.hpp"

#ifndef FPPLAB_VERSION
#define FPPLAB_VERSION "0.0.0"
#endif

namespace fpplab::io {

using nlohmann::json;

std::string tool_version() { return "fpplab " FPPLAB_VERSION; }

std::string utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void add_outputs(RunManifest& m, const std::vector<std::string>& paths) {
  for (const auto& p : paths) {
    m.outputs.emplace_back(std::filesystem::path(p).filename().string(),
                           sha256_file_hex(p));
  }
}

std::string manifest_json(const RunManifest& m) {
  json j;
  j["tool_version"] = m.tool_version;
  j["command"] = m.command;
  j["config"] = m.config_json.empty() ? json(nullptr) : json::parse(m.config_json);
  j["master_seed"] = m.master_seed;
  j["created_utc"] = m.created_utc;
  json outputs = json::array();
  for (const auto& [name, digest] : m.outputs) {
    outputs.push_back({{"file", name}, {"sha256", digest}});
  }
  j["outputs"] = std::move(outputs);
  return j.dump(2) + "\n";
}

void write_manifest(const std::string& path, const RunManifest& m) {
  write_text_file(path, manifest_json(m));
}

RunManifest read_manifest(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": not valid JSON: " + e.what());
  }
  RunManifest m;
  m.tool_version = j.value("tool_version", "");
  m.command = j.value("command", "");
  if (j.contains("config") && !j.at("config").is_null()) {
    m.config_json = j.at("config").dump(2);
  }
  m.master_seed = j.value("master_seed", std::uint64_t{0});
  m.created_utc = j.value("created_utc", "");
  for (const auto& entry : j.value("outputs", json::array())) {
    m.outputs.emplace_back(entry.value("file", ""), entry.value("sha256", ""));
  }
  return m;
}

}  // namespace fpplab::io
