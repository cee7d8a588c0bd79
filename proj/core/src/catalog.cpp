#include "arborlab/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include "arborlab/errors.hpp"

#ifndef ARBORLAB_SOURCE_DIR
#define ARBORLAB_SOURCE_DIR "."
#endif

namespace arborlab {

PermGroup CatalogEntry::group() const {
  std::vector<Perm> gens;
  for (const auto& s : generator_strings) gens.push_back(Perm::parse(degree, s));
  return PermGroup(degree, std::move(gens));
}

std::optional<PermGroup> CatalogEntry::socle() const {
  if (socle_strings.empty()) return std::nullopt;
  std::vector<Perm> gens;
  for (const auto& s : socle_strings) gens.push_back(Perm::parse(degree, s));
  return PermGroup(degree, std::move(gens));
}

std::vector<Perm> CatalogEntry::inertia() const {
  std::vector<Perm> out;
  for (const auto& s : inertia_strings) out.push_back(Perm::parse(degree, s));
  return out;
}

nlohmann::json CatalogEntry::to_json() const {
  nlohmann::json j{{"name", name}, {"degree", degree}, {"generators", generator_strings}};
  if (!socle_strings.empty()) j["socle_generators"] = socle_strings;
  if (!inertia_strings.empty()) j["inertia"] = inertia_strings;
  if (!provenance.empty()) j["provenance"] = provenance;
  return j;
}

CatalogEntry CatalogEntry::from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.degree = j.at("degree").get<std::uint32_t>();
  e.generator_strings = j.at("generators").get<std::vector<std::string>>();
  e.socle_strings = j.value("socle_generators", std::vector<std::string>{});
  e.inertia_strings = j.value("inertia", std::vector<std::string>{});
  e.provenance = j.value("provenance", std::string{});
  return e;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  nlohmann::json j;
  in >> j;
  Catalog cat;
  for (const auto& ej : j.at("groups")) cat.entries_.push_back(CatalogEntry::from_json(ej));
  for (const auto& e : cat.entries_) {
    PermGroup g = e.group(); // parse & degree validation
    auto soc = e.socle();
    if (soc && !soc->is_normal_in(g))
      throw Error("catalog entry " + e.name + ": socle generators are not normal");
    if (e.name == "PGammaL2_9") {
      if (g.order() != 1440) throw Error("PGammaL2_9 order mismatch: " + g.order().get_str());
      if (!soc || soc->order() != 360)
        throw Error("PGammaL2_9 socle order mismatch");
    }
    for (const auto& p : e.inertia())
      if (p.degree() != e.degree) throw Error("catalog entry " + e.name + ": bad inertia degree");
  }
  return cat;
}

std::string Catalog::default_path() {
  if (const char* env = std::getenv("ARBOREAL_CATALOG"); env && *env) return env;
  return std::string(ARBORLAB_SOURCE_DIR) + "/data/catalog.json";
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

std::optional<std::pair<char, std::uint32_t>> parse_alt_sym_spec(const std::string& spec) {
  if (spec.size() < 2 || (spec[0] != 'A' && spec[0] != 'S')) return std::nullopt;
  for (std::size_t i = 1; i < spec.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(spec[i]))) return std::nullopt;
  return std::make_pair(spec[0], static_cast<std::uint32_t>(std::stoul(spec.substr(1))));
}

} // namespace

PermGroup Catalog::resolve_group(const std::string& spec) const {
  if (spec.rfind("catalog:", 0) == 0) {
    const CatalogEntry* e = find(spec.substr(8));
    if (!e) throw InvalidArgumentError("no catalog entry named " + spec.substr(8));
    return e->group();
  }
  if (auto as = parse_alt_sym_spec(spec))
    return as->first == 'A' ? PermGroup::alternating(as->second)
                            : PermGroup::symmetric(as->second);
  const CatalogEntry* e = find(spec);
  if (e) return e->group();
  throw InvalidArgumentError("cannot resolve group spec: " + spec);
}

PermGroup Catalog::resolve_socle(const std::string& spec) const {
  if (auto as = parse_alt_sym_spec(spec)) return PermGroup::alternating(as->second);
  std::string name = spec.rfind("catalog:", 0) == 0 ? spec.substr(8) : spec;
  const CatalogEntry* e = find(name);
  if (!e) throw InvalidArgumentError("cannot resolve socle for spec: " + spec);
  if (auto soc = e->socle()) return *soc;
  return e->group(); // simple groups: the socle is the group itself
}

} // namespace arborlab
