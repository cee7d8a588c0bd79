#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arborlab/block_system.hpp"
#include "arborlab/perm_group.hpp"

namespace arborlab {

/// A subspace of F_2^d invariant under the coordinate action of Alt(d).
struct Mod2Submodule {
  enum class Label { Trivial, Diagonal, Augmentation, Full };
  Label label = Label::Trivial;
  std::uint32_t d = 0;
  std::vector<std::uint32_t> basis; // bit masks, echelonized

  std::size_t dimension() const { return basis.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << basis.size(); }
  bool contains(std::uint32_t v) const;
  std::string label_string() const;
  static Label parse_label(const std::string& s);
};

/// Every Alt(d)-invariant subspace of F_2^d for d >= 5: exactly the trivial
/// space, the diagonal line, the augmentation hyperplane, and the full
/// space. Verified against an exhaustive subspace sweep for d <= 8.
std::vector<Mod2Submodule> invariant_submodules(std::uint32_t d);

/// Exhaustive enumeration of Alt(d)-invariant subspaces (d <= 8): closes the
/// cyclic submodules generated by each vector under joins.
std::vector<std::vector<std::uint32_t>> enumerate_invariant_subspaces(std::uint32_t d);

/// The wreath product C_2 wr Alt(d) on 2d points (pairs {2i, 2i+1}).
PermGroup c2_wr_alt(std::uint32_t d);

/// The block system of the d pairs.
BlockSystem c2_wr_alt_blocks(std::uint32_t d);

/// The kernel element flipping the pairs selected by the mask.
Perm kernel_vector_perm(std::uint32_t d, std::uint32_t mask);

/// The fixed generating pair of Alt(d) used for lifting and relations:
/// (0 1 2) and the d-cycle (d odd) or (1 2 .. d-1) (d even).
std::pair<Perm, Perm> alternating_generator_pair(std::uint32_t d);

/// Defining relations of Alt(d) on that generating pair, as words over
/// x, y, X = x^-1, Y = y^-1. Hard-coded for d in {5, 6, 7}; the test suite
/// re-verifies each set by coset enumeration.
std::vector<std::string> alternating_relations(std::uint32_t d);

/// Evaluates a relation word at concrete images of x and y.
Perm evaluate_word(const std::string& word, const Perm& x, const Perm& y);

/// Subgroups G <= C_2 wr Alt(d) with G meeting C_2^d exactly in K and
/// projecting onto Alt(d), enumerated by lifting the fixed generating pair
/// over the K-cosets of C_2^d and deduplicated as subgroups. d in {5,6,7}.
std::vector<PermGroup> groups_with_kernel(std::uint32_t d, const Mod2Submodule& k);

struct SectionWitness {
  Perm x_image;
  Perm y_image;
};

/// Searches the preimages of the generating pair for images satisfying the
/// Alt(d) relations; a witness is a group-theoretic section of the block
/// projection. The kernel must be a 2-group of order <= 2^7.
std::optional<SectionWitness> find_section(const PermGroup& g, std::uint32_t d);

struct SplittingCertificate {
  std::uint32_t d = 0;
  std::string kernel_label;
  std::size_t groups_found = 0;
  bool all_split = false;
  // per group: generator list and the witness images
  std::vector<std::vector<std::string>> group_generators;
  std::vector<std::pair<std::string, std::string>> witnesses;

  nlohmann::json to_json() const;
  static SplittingCertificate from_json(const nlohmann::json& j);
};

/// Runs the sweep for one kernel and collects witnesses.
SplittingCertificate splitting_certificate(std::uint32_t d, const Mod2Submodule& k);

/// Recomputes the sweep and checks the certificate's witnesses.
bool verify_certificate(const SplittingCertificate& cert);

} // namespace arborlab
