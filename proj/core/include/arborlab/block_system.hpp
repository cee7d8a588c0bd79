#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arborlab/perm_group.hpp"

namespace arborlab {

/// An invariant partition of the point set into blocks of equal size.
/// Blocks are kept in canonical form: each block sorted ascending, blocks
/// ordered by smallest element.
struct BlockSystem {
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of; // point -> block index

  BlockSystem() = default;
  /// Builds from a point -> class map; renumbers classes canonically.
  static BlockSystem from_classes(const std::vector<std::uint32_t>& class_of);
  static BlockSystem from_blocks(std::uint32_t degree,
                                 std::vector<std::vector<std::uint32_t>> blocks);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(block_of.size()); }
  std::size_t block_count() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  bool is_trivial() const; // singletons or one block

  bool is_invariant_under(const std::vector<Perm>& gens) const;

  std::string to_string() const;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
  friend auto operator<=>(const BlockSystem&, const BlockSystem&) = default;
};

/// Finest G-invariant partition putting alpha and beta in one block
/// (pair-closure). G need not be transitive for the closure itself, but all
/// callers below require transitivity.
BlockSystem min_block_system(const std::vector<Perm>& gens, std::uint32_t degree,
                             std::uint32_t alpha, std::uint32_t beta);

/// All minimal nontrivial block systems of a transitive group.
/// Empty result means G is primitive.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);

/// Every nontrivial block system: join-closure of the pair-closures.
std::vector<BlockSystem> all_block_systems(const PermGroup& g);

/// Finest common coarsening of two partitions.
BlockSystem join(const BlockSystem& a, const BlockSystem& b);

bool is_primitive(const PermGroup& g);

/// Action of G on the block indices of B. Throws when B is not invariant.
PermGroup block_action(const PermGroup& g, const BlockSystem& b);

/// Kernel of the action of G on the blocks of B, as a subgroup of G.
PermGroup block_kernel(const PermGroup& g, const BlockSystem& b);

/// True iff every consecutive 3-cycle (i i+1 i+2) is a member; those
/// 3-cycles generate Alt(degree). Degree must be at least 3.
bool contains_alternating(const PermGroup& g);

} // namespace arborlab
