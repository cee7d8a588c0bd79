#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arborlab/numbers.hpp"
#include "arborlab/perm.hpp"
#include "arborlab/perm_group.hpp"
#include "arborlab/rng.hpp"

namespace arborlab {

/// Branch data of a degree-d map: one cycle type (multiset of ramification
/// indices) per branch point, each summing to d.
struct RamificationType {
  std::uint32_t degree = 0;
  std::vector<CycleType> branch_points;

  RamificationType() = default;
  RamificationType(std::uint32_t d, std::vector<CycleType> branches);

  /// Parses "[5],[3,1,1],[2,2,1]".
  static RamificationType parse(const std::string& s);
  std::string to_string() const;
};

/// Genus from the Riemann-Hurwitz formula
///   2(g - 1) = 2 d (g0 - 1) + sum_P sum_{e in E(P)} (e - 1).
/// Throws InvalidArgumentError("inadmissible ramification data") when the
/// result is not a nonnegative integer.
long rh_genus(long source_genus_of_target, const RamificationType& r);

/// True iff one branch point is totally ramified ([d]) and the genus is 0.
bool is_polynomial_type(const RamificationType& r);

/// Chains the disjoint cycles of sigma (fixed points included as 1-cycles,
/// cycles ordered by smallest point) with transpositions between consecutive
/// cycles. The result tau is a product of (#cycles - 1) transpositions and
/// compose(sigma, tau) is a single degree-cycle.
Perm shabat_tau(const Perm& sigma);

struct BelyiFamilyReport {
  std::uint32_t d = 0, r = 0, s = 0, t = 0;
  long p = 0; // d - r
  std::optional<std::uint32_t> q;
  bool admissible = false;
  std::vector<std::string> violations;
  std::string to_string() const;
};

/// Checks the parameter constraints of the ramification family
/// [d], [r,1^p], [s^q,t]: q = (d-t)/s integral, r = q+1 (the genus-0
/// identity), gcd(s,t) = 1, r > 1, t > 1.
BelyiFamilyReport belyi_family_check(std::uint32_t d, std::uint32_t r, std::uint32_t s,
                                     std::uint32_t t);

struct TripleOracleVerdict {
  bool all_primitive = false;
  std::uint64_t triples_checked = 0;
  bool exhaustive = false;
  std::optional<std::pair<Perm, Perm>> counterexample; // (y, z) with x the standard d-cycle
};

struct SampledMode {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
};

/// Sweeps y over the class [r,1^(d-r)] and z over [s^q,t] with x the
/// standard d-cycle and reports whether every <x,y,z> is primitive.
/// Exhaustive mode is allowed for d <= 7; parameters must be admissible.
TripleOracleVerdict triple_primitivity_oracle(std::uint32_t d, std::uint32_t r, std::uint32_t s,
                                              std::uint32_t t,
                                              std::optional<SampledMode> sampled = std::nullopt);

struct InvariableGenerationOptions {
  std::uint64_t group_cap = 100'000;
  std::uint64_t conjugate_cap = 5'000;
};

/// True iff for every choice of conjugators x_i in G the group generated by
/// the conjugated subgroups contains N. The first subgroup stays fixed
/// (simultaneous conjugation) and the rest range over their distinct
/// conjugates.
bool invariably_generates(const PermGroup& g, const PermGroup& n,
                          const std::vector<PermGroup>& subgroups,
                          const InvariableGenerationOptions& opts = {});

/// A point of the projective line over Q.
struct RationalPoint {
  bool infinite = false;
  Rational value; // meaningful when finite

  static RationalPoint infinity() { return {true, Rational(0)}; }
  static RationalPoint of(const Rational& v) { return {false, v}; }
  static RationalPoint parse(const std::string& s); // "inf" or "num/den"
  std::string to_string() const;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Multiplicity with which two distinct points of P^1(Q) meet at the prime
/// p: v_p(a-b) when both have nonnegative valuation, v_p(1/a - 1/b) when
/// both are negative, the 1/x chart for infinity, and 0 (no meet) otherwise.
std::uint64_t meets_at(const RationalPoint& a, const RationalPoint& b, const BigInt& p);

} // namespace arborlab
