#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace oscdx {

struct InputDigest {
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json config;
  nlohmann::json seeds;
  std::vector<InputDigest> inputs;
  std::vector<std::string> outputs;
  std::string tool_version;
  std::string timestamp;  // UTC ISO-8601; honours SOURCE_DATE_EPOCH
};

std::string sha256_file(const std::filesystem::path& path);
std::string utc_timestamp();

nlohmann::json to_json(const RunManifest& m);

// Writes <output>.manifest.json next to the primary output.
std::filesystem::path write_manifest(const RunManifest& m, const std::filesystem::path& primary_output);

}  // namespace oscdx
