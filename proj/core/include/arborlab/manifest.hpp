#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace arborlab {

/// Record of one command invocation: everything needed to replay it.
/// The hashed payload excludes the timestamp, so a replay of the same
/// parameters keys to the same hash.
struct RunManifest {
  std::string command;        // subcommand path, e.g. "scan hits"
  nlohmann::json parameters;  // full parameter set, canonical form
  std::optional<std::uint64_t> seed;
  nlohmann::json caps;        // active caps / limits
  std::vector<std::string> invocation; // the argument vector, for replay
  std::string version;
  std::string created_at;     // ISO-8601, not hashed

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
  static RunManifest make(std::string command, nlohmann::json parameters,
                          std::optional<std::uint64_t> seed = std::nullopt,
                          nlohmann::json caps = nlohmann::json::object());

  /// FNV-1a 64 over the canonical payload (command, parameters, seed, caps,
  /// version), hex-encoded.
  std::string payload_hash() const;
};

std::uint64_t fnv1a64(const std::string& data);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace arborlab
