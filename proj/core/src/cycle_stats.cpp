#include "arborlab/cycle_stats.hpp"

#include <algorithm>
#include <set>

#include "arborlab/classes.hpp"
#include "arborlab/errors.hpp"

namespace arborlab {

Rational Distribution::at(std::uint64_t k) const {
  auto it = p.find(k);
  return it == p.end() ? Rational(0) : it->second;
}

Rational Distribution::mean() const {
  Rational m(0);
  for (const auto& [k, prob] : p) m += Rational(static_cast<unsigned long>(k)) * prob;
  return m;
}

Rational Distribution::total() const {
  Rational t(0);
  for (const auto& [k, prob] : p) t += prob;
  return t;
}

nlohmann::json Distribution::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, prob] : p)
    rows.push_back({k, prob.get_num().get_str(), prob.get_den().get_str()});
  return {{"degree", degree}, {"probabilities", rows}};
}

Rational total_variation(const Distribution& a, const Distribution& b) {
  std::set<std::uint64_t> keys;
  for (const auto& [k, _] : a.p) keys.insert(k);
  for (const auto& [k, _] : b.p) keys.insert(k);
  Rational tv(0);
  for (auto k : keys) tv += abs(a.at(k) - b.at(k));
  return tv / 2;
}

nlohmann::json CosetFpfTable::to_json() const {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : rows)
    table.push_back({row.label, row.fpf.get_num().get_str(), row.fpf.get_den().get_str()});
  return {{"group", group_label},
          {"subgroup", subgroup_label},
          {"table", table},
          {"alpha", {alpha.get_num().get_str(), alpha.get_den().get_str()}}};
}

BigInt derangements(unsigned j) {
  BigInt a = 1, b = 0; // D_0, D_1
  if (j == 0) return a;
  if (j == 1) return b;
  for (unsigned i = 2; i <= j; ++i) {
    BigInt c = (a + b) * (i - 1);
    a = b;
    b = c;
  }
  return b;
}

BigInt even_derangements(unsigned j) {
  if (j == 0) return 1;
  if (j == 1) return 0;
  BigInt corr = (j % 2 == 1) ? BigInt(j - 1) : BigInt(-(long)(j - 1));
  return (derangements(j) + corr) / 2;
}

OldsValues olds_coset_formula(unsigned n) {
  if (n < 2) throw InvalidArgumentError("olds_coset_formula needs n >= 2");
  Rational partial_sum(0);
  Rational term(1);
  partial_sum += term; // i = 0
  for (unsigned i = 1; i <= n; ++i) {
    term /= (long)i;
    if (i % 2 == 1)
      partial_sum -= term;
    else
      partial_sum += term;
  }
  Rational corr(BigInt(n - 1), factorial(n));
  corr.canonicalize();
  OldsValues v;
  if (n % 2 == 1) {
    v.alternating_coset = partial_sum + corr;
    v.odd_coset = partial_sum - corr;
  } else {
    v.alternating_coset = partial_sum - corr;
    v.odd_coset = partial_sum + corr;
  }
  return v;
}

namespace {

bool is_natural_symmetric(const PermGroup& g) {
  return g.degree() >= 1 && g.order() == factorial(g.degree());
}

bool is_natural_alternating(const PermGroup& g) {
  if (g.degree() < 3) return false;
  if (g.order() != factorial(g.degree()) / 2) return false;
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [](const Perm& p) { return p.is_even(); });
}

// fixed-point-free proportions of the even/odd part of Sym(d), by class sums
std::pair<Rational, Rational> sym_coset_fpf_by_classes(std::uint32_t d) {
  BigInt even_fpf = 0, odd_fpf = 0;
  for (const auto& type : partitions_of(d)) {
    if (type.count_of(1) > 0) continue;
    BigInt size = class_size(type);
    if (type.is_even())
      even_fpf += size;
    else
      odd_fpf += size;
  }
  BigInt half = factorial(d) / 2;
  Rational even_prop(even_fpf, half), odd_prop(odd_fpf, half);
  even_prop.canonicalize();
  odd_prop.canonicalize();
  return {even_prop, odd_prop};
}

} // namespace

CosetFpfTable coset_fpf_table(const PermGroup& g, const PermGroup& n,
                              const CosetFpfOptions& opts) {
  if (g.degree() != n.degree()) throw DegreeMismatchError("coset_fpf_table degree mismatch");
  if (!n.is_normal_in(g)) throw InvalidArgumentError("subgroup is not normal in the group");

  CosetFpfTable table;
  table.group_label = opts.group_label;
  table.subgroup_label = opts.subgroup_label;

  const std::uint32_t d = g.degree();
  const bool g_sym = is_natural_symmetric(g);
  const bool g_alt = is_natural_alternating(g);
  const bool n_alt = is_natural_alternating(n) || (n.degree() < 3 && n.order() == 1);

  if (g_sym && n_alt && d >= 2) {
    auto [even_prop, odd_prop] = sym_coset_fpf_by_classes(d);
    table.rows.push_back({"A" + std::to_string(d), Perm::identity(d), even_prop});
    table.rows.push_back({"S" + std::to_string(d) + "\\A" + std::to_string(d),
                          Perm::transposition(d, 0, 1), odd_prop});
  } else if (g_alt && n_alt && g.order() == n.order()) {
    auto [even_prop, odd_prop] = sym_coset_fpf_by_classes(d);
    (void)odd_prop;
    table.rows.push_back({"A" + std::to_string(d), Perm::identity(d), even_prop});
  } else {
    if (g.order() > BigInt(static_cast<unsigned long>(opts.element_cap)))
      throw OrderCapError("coset traversal refused: |G| = " + g.order().get_str() +
                          " exceeds cap " + std::to_string(opts.element_cap));
    // left-coset transversal by BFS over generators
    std::vector<Perm> reps{Perm::identity(d)};
    const BigInt index = g.order() / n.order();
    if (index > 10'000) throw OrderCapError("coset table refused: index " + index.get_str());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (BigInt(static_cast<unsigned long>(reps.size())) == index) break;
      for (const auto& gen : g.generators()) {
        Perm cand = compose(gen, reps[i]);
        bool known = false;
        for (const auto& r : reps)
          if (n.contains(compose(r.inverse(), cand))) {
            known = true;
            break;
          }
        if (!known) reps.push_back(std::move(cand));
      }
    }
    if (BigInt(static_cast<unsigned long>(reps.size())) != index)
      throw InvalidArgumentError("coset transversal did not close");
    for (const auto& rep : reps) {
      std::uint64_t fpf = 0, count = 0;
      n.for_each_element(
          [&](const Perm& x) {
            ++count;
            const Perm& lead = rep;
            bool fixes = false;
            for (std::uint32_t pt = 0; pt < d; ++pt)
              if (lead(x(pt)) == pt) {
                fixes = true;
                break;
              }
            if (!fixes) ++fpf;
            return true;
          },
          opts.element_cap);
      Rational prop(BigInt(static_cast<unsigned long>(fpf)),
                    BigInt(static_cast<unsigned long>(count)));
      prop.canonicalize();
      table.rows.push_back({rep.is_identity() ? std::string("N") : rep.to_cycle_string(), rep,
                            prop});
    }
  }

  table.alpha = table.rows.front().fpf;
  for (const auto& row : table.rows) table.alpha = std::min(table.alpha, row.fpf);
  return table;
}

namespace {

using Pgf = std::vector<Rational>; // coefficient k = P(statistic == k)

Pgf pgf_multiply(const Pgf& a, const Pgf& b) {
  Pgf out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// outer(inner(x)) by Horner
Pgf pgf_compose(const Pgf& outer, const Pgf& inner) {
  Pgf acc{Rational(0)};
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc = pgf_multiply(acc, inner);
    if (acc.empty()) acc.assign(1, Rational(0));
    acc[0] += outer[i];
  }
  return acc;
}

Pgf fixed_point_pgf(const WreathLevel& lv) {
  const std::uint32_t d = lv.degree;
  Pgf q(d + 1, Rational(0));
  if (lv.kind == LevelKind::Sym) {
    BigInt total = factorial(d);
    for (std::uint32_t k = 0; k <= d; ++k) {
      Rational c(binomial(d, k) * derangements(d - k), total);
      c.canonicalize();
      q[k] = c;
    }
  } else if (lv.kind == LevelKind::Alt) {
    BigInt total = factorial(d) / 2;
    for (std::uint32_t k = 0; k <= d; ++k) {
      Rational c(binomial(d, k) * even_derangements(d - k), total);
      c.canonicalize();
      q[k] = c;
    }
  } else {
    throw InvalidArgumentError("exact mode supports Alt/Sym levels only");
  }
  return q;
}

// rising factorial x(x+1)...(x+d-1) as integer coefficients
std::vector<BigInt> rising_factorial_coeffs(std::uint32_t d) {
  std::vector<BigInt> c{BigInt(0), BigInt(1)}; // x
  for (std::uint32_t i = 1; i < d; ++i) {
    std::vector<BigInt> next(c.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j] * (long)i;
      next[j + 1] += c[j];
    }
    c = std::move(next);
  }
  return c;
}

Pgf cycle_count_pgf(const WreathLevel& lv) {
  const std::uint32_t d = lv.degree;
  auto rising = rising_factorial_coeffs(d);
  Pgf q(d + 1, Rational(0));
  if (lv.kind == LevelKind::Sym) {
    BigInt total = factorial(d);
    for (std::uint32_t k = 0; k <= d; ++k) {
      Rational c(rising[k], total);
      c.canonicalize();
      q[k] = c;
    }
  } else if (lv.kind == LevelKind::Alt) {
    // even part: (rising + falling)/2, normalized by |Alt(d)|
    // falling coefficients alternate sign off the rising ones
    BigInt total = factorial(d); // (…)/2 over d!/2 cancels to /d!
    for (std::uint32_t k = 0; k <= d; ++k) {
      BigInt falling = ((d - k) % 2 == 0) ? rising[k] : -rising[k];
      Rational c(rising[k] + falling, total);
      c.canonicalize();
      q[k] = c;
    }
  } else {
    throw InvalidArgumentError("exact mode supports Alt/Sym levels only");
  }
  return q;
}

Distribution pgf_to_distribution(const Pgf& pgf, std::uint64_t degree) {
  Distribution d;
  d.degree = degree;
  for (std::size_t k = 0; k < pgf.size(); ++k)
    if (pgf[k] != 0) d.p[k] = pgf[k];
  return d;
}

void check_exact_tower(const WreathTower& t, bool cap_depth) {
  if (!t.all_levels_standard())
    throw InvalidArgumentError("exact mode rejects Custom levels");
  for (const auto& lv : t.levels())
    if (lv.degree > 12) throw OrderCapError("exact mode capped at per-level degree 12");
  if (cap_depth && t.depth() > 4) throw OrderCapError("exact mode capped at depth 4");
}

} // namespace

Distribution fixed_point_distribution(const WreathTower& t) {
  check_exact_tower(t, false);
  Pgf acc = fixed_point_pgf(t.levels()[0]);
  for (std::size_t l = 1; l < t.depth(); ++l)
    acc = pgf_compose(acc, fixed_point_pgf(t.levels()[l]));
  return pgf_to_distribution(acc, t.leaf_count());
}

FullCycleResult full_cycle_proportion(const WreathTower& t, std::uint64_t mc_samples,
                                      std::uint64_t seed) {
  FullCycleResult res;
  bool exact_ok = t.all_levels_standard() && t.depth() <= 4;
  for (const auto& lv : t.levels())
    if (lv.degree > 12) exact_ok = false;
  if (exact_ok) {
    res.exact = true;
    res.value = Rational(1);
    for (const auto& lv : t.levels()) {
      std::uint32_t d = lv.degree;
      Rational q;
      if (lv.kind == LevelKind::Sym) {
        q = Rational(1, d);
      } else { // Alt: d-cycles are even exactly when d is odd
        q = (d % 2 == 1) ? Rational(2, d) : Rational(0);
      }
      q.canonicalize();
      res.value *= q;
    }
    res.value.canonicalize();
    return res;
  }
  res.exact = false;
  res.samples = mc_samples;
  res.seed = seed;
  Rng rng(seed);
  std::uint64_t hits = 0;
  TowerSampler sampler(t);
  for (std::uint64_t i = 0; i < mc_samples; ++i) {
    if (sampler.draw(rng).cycle_count() == 1) ++hits;
  }
  res.estimate = static_cast<double>(hits) / static_cast<double>(mc_samples);
  return res;
}

CycleCountResult cycle_count_distribution(const WreathTower& t, StatMode mode,
                                          std::uint64_t samples, std::uint64_t seed) {
  CycleCountResult res;
  if (mode == StatMode::Exact) {
    check_exact_tower(t, true);
    Pgf acc = cycle_count_pgf(t.levels()[0]);
    for (std::size_t l = 1; l < t.depth(); ++l)
      acc = pgf_compose(acc, cycle_count_pgf(t.levels()[l]));
    res.dist = pgf_to_distribution(acc, t.leaf_count());
    res.exact = true;
    return res;
  }
  if (samples == 0) throw InvalidArgumentError("Monte Carlo mode needs a sample count");
  res.exact = false;
  res.samples = samples;
  res.seed = seed;
  res.dist.degree = t.leaf_count();
  Rng rng(seed);
  TowerSampler sampler(t);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < samples; ++i) ++counts[sampler.draw(rng).cycle_count()];
  for (const auto& [k, c] : counts) {
    Rational prob(BigInt(static_cast<unsigned long>(c)),
                  BigInt(static_cast<unsigned long>(samples)));
    prob.canonicalize();
    res.dist.p[k] = prob;
  }
  return res;
}

FewCyclesBound few_cycles_bound(unsigned n, unsigned g_n, const Rational& gamma) {
  if (g_n < 1 || g_n > n) throw InvalidArgumentError("few_cycles_bound needs 1 <= gN <= N");
  if (!(gamma > 0 && gamma < 1))
    throw InvalidArgumentError("few_cycles_bound needs 0 < gamma < 1");
  FewCyclesBound out;
  out.degenerate = (g_n == n);
  out.sum = Rational(0);
  for (unsigned k = 0; k < g_n; ++k)
    out.sum += rational_pow(gamma, n - k) * Rational(binomial(n, n - k));
  out.sum.canonicalize();
  BigInt n_pow;
  mpz_ui_pow_ui(n_pow.get_mpz_t(), n, g_n);
  out.bound = rational_pow(gamma, n - g_n) * Rational(n_pow);
  out.bound.canonicalize();
  return out;
}

std::map<CycleType, Rational> cycle_type_distribution(const PermGroup& g, std::uint64_t cap) {
  std::map<CycleType, std::uint64_t> counts;
  std::uint64_t total = 0;
  g.for_each_element(
      [&](const Perm& p) {
        ++counts[cycle_type(p)];
        ++total;
        return true;
      },
      cap);
  std::map<CycleType, Rational> out;
  for (const auto& [t, c] : counts) {
    Rational prob(BigInt(static_cast<unsigned long>(c)), BigInt(static_cast<unsigned long>(total)));
    prob.canonicalize();
    out[t] = prob;
  }
  return out;
}

} // namespace arborlab
