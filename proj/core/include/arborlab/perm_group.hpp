#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "arborlab/numbers.hpp"
#include "arborlab/perm.hpp"
#include "arborlab/rng.hpp"

namespace arborlab {

/// Default cap for exhaustive element enumeration. Groups above it refuse
/// enumeration-based operations with OrderCapError.
inline constexpr std::uint64_t kEnumerationCap = 100'000'000ULL;

/// A finite permutation group given by generators, with a base and strong
/// generating set built on first query and cached. The value is immutable
/// after construction of the chain and safe to share across readers;
/// chain construction itself is serialized per value.
class PermGroup {
public:
  PermGroup(std::uint32_t degree, std::vector<Perm> generators);
  explicit PermGroup(std::vector<Perm> generators); // degree from generators; must be nonempty

  static PermGroup trivial(std::uint32_t degree);
  static PermGroup symmetric(std::uint32_t degree);
  static PermGroup alternating(std::uint32_t degree);
  static PermGroup cyclic(const Perm& p);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const BigInt& order() const;
  bool order_fits_u64() const;
  std::uint64_t order_u64() const; // requires order_fits_u64()

  bool contains(const Perm& p) const;
  bool is_trivial() const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool is_normal_in(const PermGroup& g) const;

  std::vector<std::vector<std::uint32_t>> orbits() const;
  bool is_transitive() const;

  /// Streams every element exactly once (the identity included). Stops early
  /// when the visitor returns false. Throws OrderCapError when the group
  /// order exceeds `cap`.
  void for_each_element(const std::function<bool(const Perm&)>& visit,
                        std::uint64_t cap = kEnumerationCap) const;
  std::vector<Perm> elements(std::uint64_t cap = kEnumerationCap) const;

  /// Subgroup fixing every listed point.
  PermGroup pointwise_stabilizer(std::span<const std::uint32_t> points) const;

  /// Exactly uniform element, via uniform transversal picks along the chain.
  Perm uniform_element(Rng& rng) const;

  /// Images of this group's generators under point relabeling; used to move
  /// a group onto another point set.
  PermGroup conjugated_by(const Perm& g) const;

private:
  struct Chain;
  struct ChainBox;
  const Chain& chain() const;

  std::uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::shared_ptr<ChainBox> box_;
  std::vector<std::uint32_t> preferred_base_; // forced base prefix, may be empty

  PermGroup(std::uint32_t degree, std::vector<Perm> generators,
            std::vector<std::uint32_t> preferred_base);
};

} // namespace arborlab
