#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arborlab/block_system.hpp"
#include "arborlab/perm_group.hpp"
#include "arborlab/rng.hpp"

namespace arborlab {

enum class LevelKind { Alt, Sym, Custom };

struct WreathLevel {
  std::uint32_t degree = 0;
  LevelKind kind = LevelKind::Sym;
  std::vector<Perm> custom_gens; // only for LevelKind::Custom
  std::string custom_name;       // label for reports

  /// Generators of this level's group acting on {0..degree-1}.
  std::vector<Perm> group_generators() const;
  BigInt group_order() const;
  std::string to_string() const;
};

/// An iterated wreath product given level by level from outermost (the
/// block action at the root) to innermost (the leaves).
class WreathTower {
public:
  WreathTower() = default;
  explicit WreathTower(std::vector<WreathLevel> levels);

  static WreathLevel alt(std::uint32_t d);
  static WreathLevel sym(std::uint32_t d);
  static WreathLevel custom(std::uint32_t d, std::vector<Perm> gens, std::string name);

  /// Parses compact tower specs: "A5*A5", "S2^3", "A5*S3^2".
  /// The leftmost factor is the outermost level. "custom:FILE#name" levels
  /// are resolved by the caller (catalog) before reaching here.
  static WreathTower parse(const std::string& spec);

  const std::vector<WreathLevel>& levels() const { return levels_; }
  std::size_t depth() const { return levels_.size(); }
  std::uint64_t leaf_count() const;
  BigInt order() const;
  bool all_levels_standard() const; // no Custom levels
  std::string to_string() const;

  /// Truncation to the outermost `depth` levels.
  WreathTower prefix(std::size_t depth) const;

  /// Leaf index of mixed-radix digits (outermost first).
  std::uint64_t leaf_index(const std::vector<std::uint32_t>& digits) const;

  /// The nested invariant partitions B_1 (coarsest, by the outermost digit)
  /// through B_{r-1}; each B_{i+1} refines B_i.
  std::vector<BlockSystem> natural_systems() const;

private:
  std::vector<WreathLevel> levels_;
};

/// Full iterated wreath product acting on the leaves.
/// leaf_count is capped at 10^6 for generator construction.
PermGroup tower_group(const WreathTower& t);

/// Exactly uniform element of the full tower group: one independent uniform
/// draw of the level group per node of the action tree. Deterministic given
/// the rng state.
Perm uniform_element(const WreathTower& t, Rng& rng);

/// Sampler with cached per-level groups; use this for repeated draws so
/// Custom levels do not rebuild their chains per element.
class TowerSampler {
public:
  explicit TowerSampler(WreathTower t);
  const WreathTower& tower() const { return tower_; }
  Perm draw(Rng& rng) const;

private:
  WreathTower tower_;
  std::vector<std::optional<PermGroup>> custom_groups_;
};

} // namespace arborlab
