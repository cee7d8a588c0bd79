#include "arborlab/manifest.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "arborlab/errors.hpp"

#ifndef ARBORLAB_VERSION
#define ARBORLAB_VERSION "0.0.0"
#endif

namespace arborlab {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j{{"command", command},
                   {"parameters", parameters},
                   {"caps", caps},
                   {"version", version},
                   {"created_at", created_at}};
  if (seed) j["seed"] = *seed;
  if (!invocation.empty()) j["invocation"] = invocation;
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.parameters = j.at("parameters");
  m.caps = j.value("caps", nlohmann::json::object());
  m.version = j.value("version", std::string{});
  m.created_at = j.value("created_at", std::string{});
  if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
  m.invocation = j.value("invocation", std::vector<std::string>{});
  return m;
}

RunManifest RunManifest::make(std::string command, nlohmann::json parameters,
                              std::optional<std::uint64_t> seed, nlohmann::json caps) {
  RunManifest m;
  m.command = std::move(command);
  m.parameters = std::move(parameters);
  m.seed = seed;
  m.caps = std::move(caps);
  m.version = ARBORLAB_VERSION;
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  m.created_at = buf;
  return m;
}

std::string RunManifest::payload_hash() const {
  nlohmann::json payload{{"command", command},
                         {"parameters", parameters},
                         {"caps", caps},
                         {"version", version}};
  if (seed) payload["seed"] = *seed;
  if (!invocation.empty()) payload["invocation"] = invocation;
  std::uint64_t h = fnv1a64(payload.dump());
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace arborlab
