#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arborlab/perm_group.hpp"

namespace arborlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  bool quick = false;     // reduced prime ranges / sample counts
  unsigned jobs = 1;      // worker threads for prime scans
  std::string catalog_path; // empty: default path
  std::string workdir;      // where certificates / replay artifacts land; empty: temp
  std::optional<std::uint32_t> splitting_d; // restrict the splitting check to one degree
};

/// The verification suite names, in acceptance order.
std::vector<std::string> all_check_names();

/// Runs the named checks ("all" expands to every one) and returns one
/// result per check.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const VerifyOptions& opts);

/// Independent factor-counting oracle: full Cantor-Zassenhaus factorization
/// over its own polynomial arithmetic, counting distinct factors. Used only
/// to cross-check the Berlekamp-nullity path.
std::uint64_t independent_factor_count(std::uint64_t p, const std::vector<std::uint64_t>& coeffs,
                                       std::uint64_t seed = 12345);

/// The constructed obstruction test set used by the predicate checks:
/// groups on m blocks of 5 points with assorted kernels.
struct ObstructionCase {
  std::string name;
  PermGroup group;
  bool expect_large = false;
  bool expect_diagonal_kernel = false; // kernel projections injective
  std::size_t expect_parts = 0;        // socle partition part count; 0 = skip
};

std::vector<ObstructionCase> obstruction_test_set();

} // namespace arborlab
