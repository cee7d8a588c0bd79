#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arborlab/perm_group.hpp"

namespace arborlab {

struct CatalogEntry {
  std::string name;
  std::uint32_t degree = 0;
  std::vector<std::string> generator_strings;
  std::vector<std::string> socle_strings;   // optional
  std::vector<std::string> inertia_strings; // optional
  std::string provenance;

  PermGroup group() const;
  std::optional<PermGroup> socle() const;
  std::vector<Perm> inertia() const;

  nlohmann::json to_json() const;
  static CatalogEntry from_json(const nlohmann::json& j);
};

/// The shipped group catalog. Loading validates every entry: generators
/// parse at the stated degree, socle generators (when present) generate a
/// normal subgroup, and the PGammaL2_9 entry has order 1440 with socle
/// order 360.
class Catalog {
public:
  static Catalog load(const std::string& path);
  /// ARBOREAL_CATALOG env var when set, else the repository data file.
  static std::string default_path();
  static Catalog load_default() { return load(default_path()); }

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;

  /// Resolves "catalog:NAME", "A<d>", "S<d>" to a group.
  PermGroup resolve_group(const std::string& spec) const;
  /// The socle for the same specs: the socle entry for catalog groups when
  /// present (the group itself otherwise), Alt(d) for A/S specs.
  PermGroup resolve_socle(const std::string& spec) const;

private:
  std::vector<CatalogEntry> entries_;
};

} // namespace arborlab
