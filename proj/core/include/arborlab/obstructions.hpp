#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arborlab/block_system.hpp"
#include "arborlab/perm_group.hpp"

namespace arborlab {

/// True iff G contains, for every block of B, every consecutive 3-cycle
/// supported inside that block (identity elsewhere). Those 3-cycles generate
/// Alt(block), so this certifies that the kernel of the block action
/// contains Alt(d)^blocks without computing the kernel.
/// Blocks must have size d; the per-block socle Alt(d) is caller-asserted.
bool is_large_kernel(const PermGroup& g, const BlockSystem& b, std::uint32_t socle_degree);

/// True iff, for every nontrivial G-invariant partition B', the common
/// refinement of B and B' has a nontrivial block at the base point, i.e. the
/// block stabilizers through the partition/subgroup correspondence intersect
/// strictly above the point stabilizer. Degree capped at 10^4.
bool is_invariant_decomposition(const PermGroup& g, const BlockSystem& b);

/// Outer-automorphism pairing of S6 cycle types; identity away from the
/// three swapped pairs.
CycleType s6_class_twist(const CycleType& t);

/// True iff all components are conjugate in Aut(Alt(d)) where d is the
/// common degree: equal cycle types, except that for d = 6 the S6
/// outer-automorphism pairing is also accepted.
bool is_diagonal_element(const std::vector<Perm>& components);

/// True iff the projection of K to each block of B is injective.
/// K must fix every block of B setwise.
bool is_diagonal_subgroup(const PermGroup& k, const BlockSystem& b);

/// Partition of the block set describing how the intersection of the block
/// kernel with Alt(d)^blocks splits into diagonally embedded simple factors:
/// two blocks share a part iff the pairwise projection of that intersection
/// has order |Alt(d)| rather than |Alt(d)|^2.
/// Throws when the kernel is trivial or the intersection's order is not a
/// power of |Alt(d)|.
BlockSystem socle_partition(const PermGroup& g, const BlockSystem& b, std::uint32_t socle_degree);

/// Condition (1) of the conjugation-compatibility test: the images of P's
/// parts under the natural map to Q's parts form a partition of Q's parts.
/// Both partitions must be G-invariant.
bool partitions_compatible(const PermGroup& g, const BlockSystem& p, const BlockSystem& q);

enum class Largeness { Large, NotLarge, NotApplicable };

struct LevelReport {
  std::size_t level = 0; // 1-based kernel index, outermost first
  BigInt kernel_order;
  bool galois_proper = false;
  Largeness largeness = Largeness::NotApplicable;
  std::string note;
};

struct LevelProfile {
  std::vector<LevelReport> levels;
  bool all_large() const;
  bool all_galois_proper() const;
};

/// Per-level kernel profile of a group acting on leaves with nested
/// invariant systems B_1 > B_2 > ... > B_{r-1} (coarsest first).
/// socle_degrees[i] is the per-block degree at kernel level i+1; levels with
/// socle degree < 5 get Largeness::NotApplicable and a warning note.
LevelProfile largeness_profile(const PermGroup& g, const std::vector<BlockSystem>& systems,
                               const std::vector<std::uint32_t>& socle_degrees);

/// The product-action counterexample to conjugation compatibility:
/// Alt(n)^3 x| Sym(3) with its two partitions of the six simple factors.
struct ConjugationCounterexample {
  PermGroup product_group;    // degree 75 at n = 5: three blocks of n^2 points
  BlockSystem product_blocks; // the three blocks
  PermGroup flag_group;       // conjugation action on the 6 simple factors
  BlockSystem flag_p;         // factors grouped by underlying copy of Alt(n)
  BlockSystem flag_pj;        // factors grouped by block
};

ConjugationCounterexample build_conjugation_counterexample(std::uint32_t n);

} // namespace arborlab
