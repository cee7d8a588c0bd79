#include "arborlab/ramification.hpp"

#include <algorithm>
#include <numeric>

#include "arborlab/block_system.hpp"
#include "arborlab/classes.hpp"
#include "arborlab/errors.hpp"

namespace arborlab {

RamificationType::RamificationType(std::uint32_t d, std::vector<CycleType> branches)
    : degree(d), branch_points(std::move(branches)) {
  for (const auto& b : branch_points)
    if (b.degree() != degree)
      throw InvalidArgumentError("branch entry " + b.to_string() + " does not sum to degree " +
                                 std::to_string(degree));
}

RamificationType RamificationType::parse(const std::string& s) {
  std::vector<CycleType> branches;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ',' || s[i] == ' ')) ++i;
    if (i >= s.size()) break;
    if (s[i] != '[') throw ParseError("expected '[' in ramification type: " + s);
    std::size_t close = s.find(']', i);
    if (close == std::string::npos) throw ParseError("unterminated branch entry: " + s);
    branches.push_back(CycleType::parse(s.substr(i, close - i + 1)));
    i = close + 1;
  }
  if (branches.empty()) throw ParseError("empty ramification type");
  const std::uint32_t degree = branches.front().degree();
  return RamificationType(degree, std::move(branches));
}

std::string RamificationType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < branch_points.size(); ++i) {
    if (i) out += ',';
    out += branch_points[i].to_string();
  }
  return out;
}

long rh_genus(long source_genus_of_target, const RamificationType& r) {
  long total = 0;
  for (const auto& b : r.branch_points)
    for (auto e : b.parts) total += static_cast<long>(e) - 1;
  // 2(g-1) = 2d(g0-1) + total
  long rhs = 2 * static_cast<long>(r.degree) * (source_genus_of_target - 1) + total;
  if (rhs % 2 != 0) throw InvalidArgumentError("inadmissible ramification data (odd total)");
  long g = rhs / 2 + 1;
  if (g < 0) throw InvalidArgumentError("inadmissible ramification data (negative genus)");
  return g;
}

bool is_polynomial_type(const RamificationType& r) {
  bool totally_ramified = false;
  for (const auto& b : r.branch_points)
    if (b.parts.size() == 1 && b.parts[0] == r.degree) totally_ramified = true;
  if (!totally_ramified) return false;
  try {
    return rh_genus(0, r) == 0;
  } catch (const InvalidArgumentError&) {
    return false;
  }
}

Perm shabat_tau(const Perm& sigma) {
  if (sigma.degree() < 2) throw InvalidArgumentError("shabat_tau needs degree >= 2");
  auto cycs = sigma.cycles(true); // ordered by smallest point
  Perm tau = Perm::identity(sigma.degree());
  for (std::size_t i = 0; i + 1 < cycs.size(); ++i) {
    std::uint32_t last = cycs[i].back();
    std::uint32_t first = cycs[i + 1].front();
    tau = compose(tau, Perm::transposition(sigma.degree(), last, first));
  }
  return tau;
}

std::string BelyiFamilyReport::to_string() const {
  std::string s = "d=" + std::to_string(d) + " r=" + std::to_string(r) +
                  " s=" + std::to_string(this->s) + " t=" + std::to_string(t) + ": ";
  if (admissible) return s + "admissible";
  s += "inadmissible (";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) s += "; ";
    s += violations[i];
  }
  return s + ")";
}

BelyiFamilyReport belyi_family_check(std::uint32_t d, std::uint32_t r, std::uint32_t s,
                                     std::uint32_t t) {
  if (d < 1 || r < 1 || s < 1 || t < 1)
    throw InvalidArgumentError("belyi_family_check needs positive parameters");
  BelyiFamilyReport rep;
  rep.d = d;
  rep.r = r;
  rep.s = s;
  rep.t = t;
  rep.p = static_cast<long>(d) - static_cast<long>(r);
  if (rep.p < 0) rep.violations.push_back("r exceeds d");
  if (t > d) rep.violations.push_back("t exceeds d");
  if (t <= d && (d - t) % s != 0) {
    rep.violations.push_back("q = (d-t)/s is not integral");
  } else if (t <= d) {
    std::uint32_t q = (d - t) / s;
    rep.q = q;
    if (q == 0) rep.violations.push_back("q = 0: the [s^q,t] branch degenerates");
    // r + t + q(s-1) = d+1 reduces to r = q+1 given t + qs = d
    if (r != q + 1) rep.violations.push_back("genus-0 identity r = q+1 fails");
  }
  if (std::gcd(s, t) != 1) rep.violations.push_back("gcd(s,t) > 1");
  if (r <= 1) rep.violations.push_back("r must exceed 1");
  if (t <= 1) rep.violations.push_back("t must exceed 1");
  rep.admissible = rep.violations.empty();
  return rep;
}

namespace {

bool gens_generate_primitive(const std::vector<Perm>& gens, std::uint32_t degree) {
  for (std::uint32_t beta = 1; beta < degree; ++beta)
    if (!min_block_system(gens, degree, 0, beta).is_trivial()) return false;
  return true;
}

} // namespace

TripleOracleVerdict triple_primitivity_oracle(std::uint32_t d, std::uint32_t r, std::uint32_t s,
                                              std::uint32_t t,
                                              std::optional<SampledMode> sampled) {
  BelyiFamilyReport rep = belyi_family_check(d, r, s, t);
  if (!rep.admissible)
    throw InvalidArgumentError("triple oracle needs admissible parameters: " + rep.to_string());
  if (!sampled && d > 7)
    throw OrderCapError("exhaustive triple oracle capped at d <= 7");

  std::vector<std::uint32_t> all(d);
  std::iota(all.begin(), all.end(), 0u);
  const Perm x = Perm::cycle(d, all);

  std::vector<std::uint32_t> y_parts{r};
  for (std::uint32_t i = 0; i < d - r; ++i) y_parts.push_back(1);
  const CycleType y_type(y_parts);
  std::vector<std::uint32_t> z_parts;
  for (std::uint32_t i = 0; i < *rep.q; ++i) z_parts.push_back(s);
  z_parts.push_back(t);
  const CycleType z_type(z_parts);

  TripleOracleVerdict verdict;
  verdict.all_primitive = true;

  auto check = [&](const Perm& y, const Perm& z) {
    ++verdict.triples_checked;
    if (!gens_generate_primitive({x, y, z}, d)) {
      verdict.all_primitive = false;
      verdict.counterexample = {y, z};
      return false;
    }
    return true;
  };

  if (!sampled) {
    verdict.exhaustive = true;
    for_each_of_cycle_type(y_type, [&](const Perm& y) {
      bool keep_going = true;
      for_each_of_cycle_type(z_type, [&](const Perm& z) {
        keep_going = check(y, z);
        return keep_going;
      });
      return keep_going;
    });
  } else {
    Rng rng(sampled->seed);
    for (std::uint64_t i = 0; i < sampled->samples; ++i) {
      Perm y = uniform_of_cycle_type(y_type, rng);
      Perm z = uniform_of_cycle_type(z_type, rng);
      if (!check(y, z)) break;
    }
  }
  return verdict;
}

bool invariably_generates(const PermGroup& g, const PermGroup& n,
                          const std::vector<PermGroup>& subgroups,
                          const InvariableGenerationOptions& opts) {
  if (subgroups.empty()) throw InvalidArgumentError("no subgroups given");
  if (!n.is_subgroup_of(g)) throw InvalidArgumentError("N must be a subgroup of G");
  for (const auto& s : subgroups)
    if (!s.is_subgroup_of(g)) throw InvalidArgumentError("each subgroup must sit inside G");
  if (g.order() > BigInt(static_cast<unsigned long>(opts.group_cap)))
    throw OrderCapError("invariable generation sweep capped at |G| = " +
                        std::to_string(opts.group_cap));

  // distinct conjugates of each subgroup past the first (the first stays
  // put: the defining property is invariant under simultaneous conjugation)
  std::vector<std::vector<PermGroup>> conjugates;
  for (std::size_t i = 1; i < subgroups.size(); ++i) {
    std::vector<PermGroup> list;
    g.for_each_element(
        [&](const Perm& x) {
          PermGroup conj = subgroups[i].conjugated_by(x);
          for (const auto& known : list)
            if (known.order() == conj.order() && conj.is_subgroup_of(known)) return true;
          if (list.size() >= opts.conjugate_cap)
            throw OrderCapError("too many conjugates in invariable generation sweep");
          list.push_back(std::move(conj));
          return true;
        },
        opts.group_cap);
    conjugates.push_back(std::move(list));
  }

  std::vector<std::size_t> pick(conjugates.size(), 0);
  for (;;) {
    std::vector<Perm> gens = subgroups[0].generators();
    for (std::size_t i = 0; i < conjugates.size(); ++i) {
      const auto& grp = conjugates[i][pick[i]];
      gens.insert(gens.end(), grp.generators().begin(), grp.generators().end());
    }
    PermGroup span(g.degree(), std::move(gens));
    for (const auto& ng : n.generators())
      if (!span.contains(ng)) return false;
    // advance mixed-radix counter
    std::size_t pos = 0;
    while (pos < pick.size()) {
      if (++pick[pos] < conjugates[pos].size()) break;
      pick[pos] = 0;
      ++pos;
    }
    if (pos == pick.size()) break;
  }
  return true;
}

RationalPoint RationalPoint::parse(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return infinity();
  return of(parse_rational(s));
}

std::string RationalPoint::to_string() const {
  return infinite ? "inf" : rational_str(value);
}

namespace {

// v_p of a nonzero rational; nullopt encodes +infinity (the value 0)
std::optional<long> rational_valuation(const Rational& q, const BigInt& p) {
  if (q == 0) return std::nullopt;
  long v = 0;
  if (q.get_num() != 0) v += valuation(q.get_num(), p);
  v -= valuation(q.get_den(), p);
  return v;
}

bool nonneg(const std::optional<long>& v) { return !v.has_value() || *v >= 0; }

} // namespace

std::uint64_t meets_at(const RationalPoint& a, const RationalPoint& b, const BigInt& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw InvalidArgumentError("meets_at needs a prime modulus");
  if (a == b) throw InvalidArgumentError("meets_at needs distinct points");

  auto finite_case = [&](const Rational& x, const Rational& y) -> std::uint64_t {
    auto vx = rational_valuation(x, p);
    auto vy = rational_valuation(y, p);
    if (nonneg(vx) && nonneg(vy)) {
      auto diff = rational_valuation(x - y, p);
      return static_cast<std::uint64_t>(std::max(0L, *diff));
    }
    if (!nonneg(vx) && !nonneg(vy)) {
      auto diff = rational_valuation(Rational(1) / x - Rational(1) / y, p);
      return static_cast<std::uint64_t>(std::max(0L, *diff));
    }
    return 0; // mixed signs: the points live in different residue charts
  };

  if (!a.infinite && !b.infinite) return finite_case(a.value, b.value);
  const RationalPoint& fin = a.infinite ? b : a;
  // 1/x chart: infinity becomes 0; it meets v iff v_p(v) < 0
  auto v = rational_valuation(fin.value, p);
  if (!v.has_value()) return 0; // the finite point is 0: v_p(1/0...) no meet
  return *v < 0 ? static_cast<std::uint64_t>(-*v) : 0;
}

} // namespace arborlab
