#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arborlab/fppoly.hpp"
#include "arborlab/numbers.hpp"
#include "arborlab/wreath.hpp"

namespace arborlab {

/// Integer-coefficient polynomial dynamical system x -> f(x) with a target
/// value a and a seed a0, all exact.
struct DynamicalSystem {
  std::vector<BigInt> f; // c0..cd, cd != 0, d >= 2
  Rational a;
  Rational a0;

  DynamicalSystem(std::vector<BigInt> coeffs, Rational target, Rational seed);
  std::uint32_t degree() const { return static_cast<std::uint32_t>(f.size()) - 1; }
  Rational apply(const Rational& x) const;

  /// Reduction mod p; empty when the leading coefficient vanishes mod p.
  std::optional<FpPoly> reduce(std::uint64_t p) const;

  /// Parses "c0,c1,...,cd".
  static std::vector<BigInt> parse_coeffs(const std::string& s);
  std::string coeffs_string() const;
};

/// Exact orbit a_0..a_n; throws GrowthCapError naming the iterate when a
/// value exceeds the bit cap.
std::vector<Rational> orbit(const DynamicalSystem& sys, std::uint64_t n,
                            std::uint64_t bit_cap = 1'000'000);

enum class HitOutcome { Hit, NoHit, Skipped };

struct HitResult {
  HitOutcome outcome = HitOutcome::Skipped;
  std::uint64_t n = 0; // least n >= 1 with a_n = a mod p, for Hit
  std::string skip_reason;
};

/// Iterates x -> f(x) mod p from a0 and looks for the least n >= 1 with
/// a_n = a (mod p), bounded by cycle detection. Skips when p divides a
/// denominator of a0 or a.
HitResult orbit_hits_mod_p(const DynamicalSystem& sys, std::uint64_t p);

struct PrimeRecord {
  std::uint64_t p = 0;
  std::string outcome; // "hit" | "no-hit" | "skipped" | "stable" | "unstable" | "pattern"
  bool skipped = false;
  bool matches = false;            // mode-specific success flag
  std::uint64_t hit_n = 0;          // hits mode
  std::vector<std::uint32_t> factor_counts; // stability mode, n = 1..n_max
  std::uint32_t c_stable_up_to = 0;          // largest horizon with all counts <= C
  std::vector<std::uint32_t> pattern;        // frobenius mode: factor-degree multiset
  bool nonsquarefree = false;                // some iterate needed squarefree-part extraction
  std::string detail;

  nlohmann::json to_json() const;
  static PrimeRecord from_json(const nlohmann::json& j);
};

struct ScanReport {
  std::string mode; // "hits" | "stability" | "frobenius"
  std::uint64_t from = 0, to = 0;
  nlohmann::json parameters; // echo of the experiment definition
  std::vector<PrimeRecord> records;

  std::uint64_t scanned() const { return records.size(); }
  std::uint64_t skipped() const;
  std::uint64_t matching() const;
  std::map<std::vector<std::uint32_t>, std::uint64_t> pattern_counts() const;

  nlohmann::json to_json() const;
  static ScanReport from_json(const nlohmann::json& j);
  std::string to_csv() const; // columns: p, outcome, detail
};

/// Disjoint-range merge; aggregates recompute from the concatenated records,
/// so merging two half-range scans equals one combined scan.
ScanReport merge_reports(const ScanReport& a, const ScanReport& b);

struct Density {
  Rational value;
  std::uint64_t matching = 0;
  std::uint64_t counted = 0; // scanned - skipped
};

/// matching / (scanned - skipped); throws when every prime was skipped.
Density density(const ScanReport& report);

ScanReport hits_scan(const DynamicalSystem& sys, std::uint64_t from, std::uint64_t to,
                     unsigned jobs = 1);

ScanReport c_stability_scan(const DynamicalSystem& sys, std::uint32_t c_bound,
                            std::uint32_t n_max, std::uint64_t from, std::uint64_t to,
                            unsigned jobs = 1);

/// Factor-degree multisets of the squarefree part of f^n(x) - a mod p.
/// Requires deg(f)^n <= 64.
ScanReport frobenius_statistics(const DynamicalSystem& sys, std::uint32_t n, std::uint64_t from,
                                std::uint64_t to, unsigned jobs = 1);

using PatternDistribution = std::map<std::vector<std::uint32_t>, Rational>;

PatternDistribution empirical_pattern_distribution(const ScanReport& report);

/// Exact cycle-type distribution of the tower group, keyed by the sorted
/// cycle-length multiset.
PatternDistribution tower_pattern_distribution(const WreathTower& t,
                                               std::uint64_t cap = 10'000'000);

Rational pattern_total_variation(const PatternDistribution& a, const PatternDistribution& b);

/// TV distance between an empirical distribution and the tower group's exact
/// cycle-type distribution.
Rational compare_to_tower(const PatternDistribution& dist, const WreathTower& t);

struct SubgroupFit {
  std::string description; // generator list
  BigInt order;
  Rational tv;
  PatternDistribution dist;
};

/// Scans every transitive subgroup of the tower group (small towers only)
/// and returns the one with minimal TV distance to the given distribution.
SubgroupFit best_fitting_transitive_subgroup(const PatternDistribution& dist,
                                             const WreathTower& t);

/// Experiment definition file: {f, a, a0, mode, C?, n_max?, primes:{from,to}, seed?}.
struct ExperimentConfig {
  explicit ExperimentConfig(DynamicalSystem sys) : system(std::move(sys)) {}

  DynamicalSystem system;
  std::string mode; // hits | stability | frobenius
  std::uint32_t c_bound = 1;
  std::uint32_t n_max = 1;
  std::uint32_t frob_n = 1;
  std::uint64_t from = 2, to = 1000;
  std::optional<std::uint64_t> seed;

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

ScanReport run_experiment(const ExperimentConfig& cfg, unsigned jobs = 1);

} // namespace arborlab
