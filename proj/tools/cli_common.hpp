#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arborlab/catalog.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/manifest.hpp"
#include "arborlab/wreath.hpp"

namespace arborlab::cli {

/// Thrown by `verify` when a check fails; the top level maps it to exit 1.
struct CheckFailure {};

struct Context {
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool quick = false;
  std::vector<std::string> invocation; // the argument vector, recorded for replay

  Catalog catalog() const { return Catalog::load_default(); }

  std::uint64_t seed_or(std::uint64_t fallback) const { return seed ? *seed : fallback; }

  std::filesystem::path ensure_out() const {
    std::filesystem::path p(out_dir);
    std::filesystem::create_directories(p);
    return p;
  }

  // writes <name>.json, <name>.csv, and <name>.manifest.json; when no csv
  // is supplied, the top-level scalars of the payload become a key,value file
  void emit(const std::string& name, RunManifest manifest, const nlohmann::json& payload,
            std::string csv = {}) const {
    if (manifest.invocation.empty()) manifest.invocation = invocation;
    auto dir = ensure_out();
    write_text_file((dir / (name + ".json")).string(), payload.dump(2) + "\n");
    if (csv.empty()) {
      csv = "key,value\n";
      for (const auto& [k, v] : payload.items())
        if (v.is_primitive()) csv += k + "," + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    write_text_file((dir / (name + ".csv")).string(), csv);
    write_text_file((dir / (name + ".manifest.json")).string(),
                    manifest.to_json().dump(2) + "\n");
    std::cout << "wrote " << (dir / (name + ".json")).string() << "\n";
  }
};

/// Tower specs with catalog-backed custom levels: factors are A<d>, S<d>,
/// or custom:FILE#NAME (FILE empty = the default catalog), each optionally
/// followed by ^k.
inline WreathTower resolve_tower(const Context& ctx, const std::string& spec) {
  std::vector<WreathLevel> levels;
  std::size_t i = 0;
  while (i < spec.size()) {
    std::size_t star = spec.find('*', i);
    std::string tok = spec.substr(i, star == std::string::npos ? std::string::npos : star - i);
    i = star == std::string::npos ? spec.size() : star + 1;
    unsigned repeat = 1;
    if (auto caret = tok.rfind('^'); caret != std::string::npos) {
      repeat = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
      tok = tok.substr(0, caret);
    }
    WreathLevel lv;
    if (tok.rfind("custom:", 0) == 0) {
      std::string ref = tok.substr(7);
      auto hash = ref.find('#');
      if (hash == std::string::npos)
        throw ParseError("custom level needs FILE#NAME: " + tok);
      std::string file = ref.substr(0, hash);
      std::string name = ref.substr(hash + 1);
      Catalog cat = file.empty() ? ctx.catalog() : Catalog::load(file);
      const CatalogEntry* e = cat.find(name);
      if (!e) throw InvalidArgumentError("no catalog entry named " + name);
      std::vector<Perm> gens;
      for (const auto& s : e->generator_strings) gens.push_back(Perm::parse(e->degree, s));
      lv = WreathTower::custom(e->degree, std::move(gens), name);
    } else {
      lv = WreathTower::parse(tok).levels().front();
      if (WreathTower::parse(tok).depth() != 1)
        throw ParseError("unexpected compound factor: " + tok);
    }
    for (unsigned k = 0; k < repeat; ++k) levels.push_back(lv);
  }
  return WreathTower(std::move(levels));
}

void register_stats(CLI::App& app, Context& ctx);
void register_scan(CLI::App& app, Context& ctx);
void register_group_ops(CLI::App& app, Context& ctx);

} // namespace arborlab::cli
