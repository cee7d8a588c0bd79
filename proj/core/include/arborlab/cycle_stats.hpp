#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "arborlab/numbers.hpp"
#include "arborlab/perm_group.hpp"
#include "arborlab/wreath.hpp"

namespace arborlab {

/// Exact probability distribution on a nonnegative integer statistic.
struct Distribution {
  std::uint64_t degree = 0; // degree of the acted-on set, for context
  std::map<std::uint64_t, Rational> p;

  Rational at(std::uint64_t k) const;
  Rational mean() const;
  Rational total() const;
  nlohmann::json to_json() const;
};

/// Exact total variation distance between two distributions.
Rational total_variation(const Distribution& a, const Distribution& b);

struct CosetFpfRow {
  std::string label;
  Perm representative;
  Rational fpf; // fixed-point-free proportion inside the coset
};

struct CosetFpfTable {
  std::string group_label;
  std::string subgroup_label;
  std::vector<CosetFpfRow> rows;
  Rational alpha; // min over rows

  nlohmann::json to_json() const;
};

struct CosetFpfOptions {
  std::uint64_t element_cap = 10'000'000; // exhaustive traversal refuses above
  std::string group_label = "G";
  std::string subgroup_label = "N";
};

/// Exact fixed-point-free proportion per coset of a normal subgroup.
/// Natural full Sym/Alt pairs are evaluated by cycle-type class sums; other
/// groups by coset-wise exhaustive traversal (transversal x subgroup), which
/// keeps memory at O(chain) and refuses groups above the element cap.
CosetFpfTable coset_fpf_table(const PermGroup& g, const PermGroup& n,
                              const CosetFpfOptions& opts = {});

struct OldsValues {
  Rational alternating_coset;
  Rational odd_coset;
};

/// Closed-form fixed-point-free proportions of the two Alt(n)-cosets of
/// Sym(n): sum_{i<=n} (-1)^i/i! +- (n-1)/n!. The alternating coset takes the
/// plus sign for odd n and the minus sign for even n; fixed by exhaustive
/// counts at n = 4 and n = 5.
OldsValues olds_coset_formula(unsigned n);

/// Derangement count and even-derangement count of Sym(j).
BigInt derangements(unsigned j);
BigInt even_derangements(unsigned j);

/// Exact distribution of the number of fixed leaves of a uniform element of
/// the full tower group, by generating-function composition across levels.
/// Exact mode requires Alt/Sym levels of degree <= 12.
Distribution fixed_point_distribution(const WreathTower& t);

struct FullCycleResult {
  bool exact = false;
  Rational value;        // exact mode
  double estimate = 0.0; // sampled mode
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Proportion of elements acting as one full cycle on the leaves. Exact for
/// Alt/Sym towers with per-level degree <= 12 and depth <= 4; Monte Carlo
/// otherwise (result carries sample count and seed).
FullCycleResult full_cycle_proportion(const WreathTower& t, std::uint64_t mc_samples = 200'000,
                                      std::uint64_t seed = 1);

enum class StatMode { Exact, MonteCarlo };

struct CycleCountResult {
  Distribution dist;
  bool exact = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Distribution of the number of disjoint cycles of a uniform tower element.
/// Exact mode composes per-level cycle-count generating functions and has
/// the same caps as fixed_point_distribution plus depth <= 4.
CycleCountResult cycle_count_distribution(const WreathTower& t, StatMode mode,
                                          std::uint64_t samples = 0, std::uint64_t seed = 1);

struct FewCyclesBound {
  Rational sum;   // sum_{k<gN} gamma^(N-k) C(N, N-k)
  Rational bound; // gamma^(N-gN) N^gN
  bool degenerate = false; // gN == N: no inequality asserted
};

FewCyclesBound few_cycles_bound(unsigned n, unsigned g_n, const Rational& gamma);

/// Exact cycle-type distribution of a group by element enumeration.
std::map<CycleType, Rational> cycle_type_distribution(const PermGroup& g,
                                                      std::uint64_t cap = kEnumerationCap);

} // namespace arborlab
