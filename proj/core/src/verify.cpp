#include "arborlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "arborlab/block_system.hpp"
#include "arborlab/catalog.hpp"
#include "arborlab/classes.hpp"
#include "arborlab/cycle_stats.hpp"
#include "arborlab/dynamics.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/fppoly.hpp"
#include "arborlab/manifest.hpp"
#include "arborlab/obstructions.hpp"
#include "arborlab/primes.hpp"
#include "arborlab/ramification.hpp"
#include "arborlab/rng.hpp"
#include "arborlab/splitting.hpp"
#include "arborlab/wreath.hpp"

namespace arborlab {

namespace {

Catalog load_catalog(const VerifyOptions& opts) {
  return opts.catalog_path.empty() ? Catalog::load_default() : Catalog::load(opts.catalog_path);
}

std::string workdir(const VerifyOptions& opts) {
  std::string dir = opts.workdir.empty()
                        ? (std::filesystem::temp_directory_path() / "arborlab-verify").string()
                        : opts.workdir;
  std::filesystem::create_directories(dir);
  return dir;
}

// ---------------------------------------------------------------- helpers

// permutation acting as g on block `b` of the 5m-point set, identity elsewhere
Perm on_block(std::uint32_t blocks, std::uint32_t b, const Perm& g) {
  std::uint32_t d = g.degree();
  std::vector<std::uint32_t> im(blocks * d);
  std::iota(im.begin(), im.end(), 0u);
  for (std::uint32_t i = 0; i < d; ++i) im[b * d + i] = b * d + g(i);
  return Perm(std::move(im));
}

// permutation acting as g on every block in `bs` simultaneously (diagonal),
// with a per-block twist
Perm on_blocks_diagonal(std::uint32_t blocks, const std::vector<std::uint32_t>& bs, const Perm& g,
                        const std::vector<Perm>& twists) {
  std::uint32_t d = g.degree();
  std::vector<std::uint32_t> im(blocks * d);
  std::iota(im.begin(), im.end(), 0u);
  for (std::size_t k = 0; k < bs.size(); ++k) {
    Perm h = twists.empty() ? g : conjugate(twists[k], g);
    for (std::uint32_t i = 0; i < d; ++i) im[bs[k] * d + i] = bs[k] * d + h(i);
  }
  return Perm(std::move(im));
}

// block permutation lift acting trivially inside blocks
Perm block_shuffle(std::uint32_t blocks, std::uint32_t d, const Perm& top) {
  std::vector<std::uint32_t> im(blocks * d);
  for (std::uint32_t b = 0; b < blocks; ++b)
    for (std::uint32_t i = 0; i < d; ++i) im[b * d + i] = top(b) * d + i;
  return Perm(std::move(im));
}

BlockSystem block_partition(std::uint32_t blocks, std::uint32_t d) {
  std::vector<std::uint32_t> class_of(blocks * d);
  for (std::uint32_t p = 0; p < blocks * d; ++p) class_of[p] = p / d;
  return BlockSystem::from_classes(class_of);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

CheckResult finish(const std::string& name, bool pass, const std::string& detail,
                   const Timer& t) {
  return {name, pass, detail, t.seconds()};
}

// --------------------------------------------------- criterion 1: olds

CheckResult check_olds(const VerifyOptions&) {
  Timer t;
  for (unsigned n = 2; n <= 12; ++n) {
    OldsValues v = olds_coset_formula(n);
    CosetFpfTable table = coset_fpf_table(PermGroup::symmetric(n), PermGroup::alternating(n));
    if (table.rows.size() != 2)
      return finish("olds", false, "expected two cosets at n=" + std::to_string(n), t);
    if (table.rows[0].fpf != v.alternating_coset || table.rows[1].fpf != v.odd_coset)
      return finish("olds", false, "formula/table mismatch at n=" + std::to_string(n), t);
  }
  return finish("olds", true, "coset tables equal the closed form for 2 <= n <= 12", t);
}

// --------------------------------------------------- criterion 2: alpha

CheckResult check_alpha(const VerifyOptions& opts) {
  Timer t;
  Catalog cat = load_catalog(opts);
  const Rational quarter(1, 4);

  const CatalogEntry* pg9 = cat.find("PGammaL2_9");
  if (!pg9) return finish("alpha", false, "catalog lacks PGammaL2_9", t);
  CosetFpfTable t9 = coset_fpf_table(pg9->group(), *pg9->socle(),
                                     {10'000'000, "PGammaL2_9", "PSL2_9"});
  if (t9.alpha != quarter)
    return finish("alpha", false, "PGammaL2_9 alpha = " + rational_str(t9.alpha) + " != 1/4", t);

  std::ostringstream log;
  log << "PGammaL2_9 alpha = 1/4";
  auto check_group = [&](const std::string& label, const PermGroup& g, const PermGroup& n,
                         std::uint64_t cap) {
    CosetFpfTable tab = coset_fpf_table(g, n, {cap, label, "socle"});
    log << "; " << label << " " << rational_str(tab.alpha);
    return tab.alpha >= quarter;
  };

  for (unsigned n = 5; n <= 12; ++n) {
    if (!check_group("S" + std::to_string(n), PermGroup::symmetric(n),
                     PermGroup::alternating(n), 10'000'000))
      return finish("alpha", false, log.str() + " < 1/4", t);
    if (!check_group("A" + std::to_string(n), PermGroup::alternating(n),
                     PermGroup::alternating(n), 10'000'000))
      return finish("alpha", false, log.str() + " < 1/4", t);
  }
  std::vector<std::string> names = {"PGammaL2_8", "PSL3_2_points", "PSL3_2_lines", "PSL3_3",
                                    "M11"};
  if (!opts.quick) names.push_back("M23");
  for (const auto& name : names) {
    const CatalogEntry* e = cat.find(name);
    if (!e) return finish("alpha", false, "catalog lacks " + name, t);
    PermGroup g = e->group();
    PermGroup n = e->socle() ? *e->socle() : g;
    // M23 slightly exceeds the default 10^7 traversal cap; lift it here
    std::uint64_t cap = name == "M23" ? 20'000'000 : 10'000'000;
    if (!check_group(name, g, n, cap)) return finish("alpha", false, log.str() + " < 1/4", t);
  }
  if (opts.quick) log << "; (quick: M23 skipped)";
  return finish("alpha", true, log.str(), t);
}

// ------------------------------------------- criterion 3: tower statistics

struct TowerEnumeration {
  Distribution fixed_points;
  Distribution cycle_counts;
};

TowerEnumeration enumerate_tower(const WreathTower& tw) {
  PermGroup g = tower_group(tw);
  std::map<std::uint64_t, std::uint64_t> fp, cc;
  std::uint64_t total = 0;
  g.for_each_element([&](const Perm& p) {
    ++fp[p.fixed_point_count()];
    ++cc[p.cycle_count()];
    ++total;
    return true;
  });
  TowerEnumeration out;
  out.fixed_points.degree = tw.leaf_count();
  out.cycle_counts.degree = tw.leaf_count();
  for (auto [k, c] : fp) {
    Rational q(BigInt((unsigned long)c), BigInt((unsigned long)total));
    q.canonicalize();
    out.fixed_points.p[k] = q;
  }
  for (auto [k, c] : cc) {
    Rational q(BigInt((unsigned long)c), BigInt((unsigned long)total));
    q.canonicalize();
    out.cycle_counts.p[k] = q;
  }
  return out;
}

std::vector<WreathTower> exact_towers() {
  return {
      WreathTower::parse("S2^2"),
      WreathTower::parse("S2^3"),
      WreathTower::parse("S3^2"),
      WreathTower::parse("A4^2"),
  };
}

CheckResult check_towers(const VerifyOptions&) {
  Timer t;
  for (const auto& tw : exact_towers()) {
    TowerEnumeration oracle = enumerate_tower(tw);
    Distribution fp = fixed_point_distribution(tw);
    if (fp.p != oracle.fixed_points.p)
      return finish("towers", false, tw.to_string() + ": fixed-point distribution mismatch", t);
    CycleCountResult cc = cycle_count_distribution(tw, StatMode::Exact);
    if (cc.dist.p != oracle.cycle_counts.p)
      return finish("towers", false, tw.to_string() + ": cycle-count distribution mismatch", t);
    if (fp.mean() != 1)
      return finish("towers", false, tw.to_string() + ": mean fixed points != 1", t);
    // full-cycle decay along the tower prefixes
    for (std::size_t depth = 2; depth <= tw.depth(); ++depth) {
      FullCycleResult cm = full_cycle_proportion(tw.prefix(depth));
      FullCycleResult cprev = full_cycle_proportion(tw.prefix(depth - 1));
      std::uint32_t d = tw.levels()[depth - 1].degree;
      Rational bound = cprev.value * Rational(d - 1, d);
      if (!(cm.value <= bound))
        return finish("towers", false, tw.to_string() + ": full-cycle decay fails", t);
    }
  }
  return finish("towers", true,
                "distributions match exhaustive enumeration for S2^2, S2^3, S3^2, A4^2; "
                "means exactly 1; decay holds",
                t);
}

// ------------------------------------------- criterion 4: fpf recursion

PermGroup level_socle(const WreathLevel& lv) {
  const std::uint32_t d = lv.degree;
  if (lv.kind == LevelKind::Sym) {
    if (d >= 3) return PermGroup::alternating(d);
    return PermGroup::symmetric(d); // soc(S_2) = S_2
  }
  if (lv.kind == LevelKind::Alt) {
    if (d >= 5) return PermGroup::alternating(d);
    if (d == 4)
      return PermGroup(4, {Perm::parse(4, "(0 1)(2 3)"), Perm::parse(4, "(0 2)(1 3)")});
    return PermGroup::alternating(d); // A_3 is its own socle
  }
  throw InvalidArgumentError("socle of custom level not supported here");
}

CheckResult check_recursion(const VerifyOptions&) {
  Timer t;
  std::ostringstream log;
  for (const auto& tw : exact_towers()) {
    for (std::size_t depth = 2; depth <= tw.depth(); ++depth) {
      const WreathLevel& lv = tw.levels()[depth - 1];
      PermGroup level_group = lv.kind == LevelKind::Sym ? PermGroup::symmetric(lv.degree)
                                                        : PermGroup::alternating(lv.degree);
      CosetFpfTable tab = coset_fpf_table(level_group, level_socle(lv));
      Rational alpha = tab.alpha;
      Distribution prev = fixed_point_distribution(tw.prefix(depth - 1));
      Distribution cur = fixed_point_distribution(tw.prefix(depth));
      Rational rhs(0);
      for (const auto& [j, pj] : prev.p) rhs += pj * rational_pow(alpha, j);
      if (!(cur.at(0) >= rhs))
        return finish("recursion", false,
                      tw.to_string() + " depth " + std::to_string(depth) + ": p(0) = " +
                          rational_str(cur.at(0)) + " < " + rational_str(rhs),
                      t);
    }
  }
  return finish("recursion", true,
                "p_m(0) >= sum_j p_{m-1}(j) alpha^j exactly, all exact-mode towers", t);
}

// ------------------------------------------- criterion 5: few-cycles bound

CheckResult check_few_cycles(const VerifyOptions&) {
  Timer t;
  const std::vector<Rational> gammas = {Rational(1, 2), Rational(3, 4), Rational(30, 31)};
  std::uint64_t checked = 0;
  for (unsigned n = 5; n <= 60; ++n)
    for (unsigned g = 1; g <= n / 3; ++g)
      for (const auto& gamma : gammas) {
        FewCyclesBound b = few_cycles_bound(n, g, gamma);
        ++checked;
        if (b.degenerate) continue;
        if (!(b.sum <= b.bound))
          return finish("few-cycles", false,
                        "sum > bound at N=" + std::to_string(n) + " gN=" + std::to_string(g) +
                            " gamma=" + rational_str(gamma),
                        t);
      }
  return finish("few-cycles", true,
                std::to_string(checked) + " grid points, binomial sum <= closed form", t);
}

// ------------------------------------------- criterion 6: factor counting

CheckResult check_factor_count(const VerifyOptions&) {
  Timer t;
  Rng rng(20240817);
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t p = primes[rng.next_below(primes.size())];
    std::uint32_t deg = 1 + static_cast<std::uint32_t>(rng.next_below(12));
    std::vector<std::uint64_t> coeffs(deg + 1);
    for (auto& c : coeffs) c = rng.next_below(p);
    if (coeffs[deg] == 0) coeffs[deg] = 1;
    FpPoly g(p, coeffs);
    std::uint64_t fast = factor_count_mod_p(g);
    std::uint64_t slow = independent_factor_count(p, coeffs);
    if (fast != slow)
      return finish("factor-count", false,
                    "mismatch at p=" + std::to_string(p) + " poly=" + g.to_string() + ": " +
                        std::to_string(fast) + " vs " + std::to_string(slow),
                    t);
  }
  return finish("factor-count", true, "1000 random polynomials, zero mismatches", t);
}

// ------------------------------------------- criterion 7: dynamical scans

CheckResult check_scans(const VerifyOptions& opts) {
  Timer t;
  std::ostringstream log;

  // (a) the Sylvester orbit
  DynamicalSystem sylvester({BigInt(1), BigInt(-1), BigInt(1)}, Rational(0), Rational(2));
  auto orb = orbit(sylvester, 4);
  const std::vector<long> expect = {2, 3, 7, 43, 1807};
  for (std::size_t i = 0; i < expect.size(); ++i)
    if (orb[i] != Rational(expect[i]))
      return finish("scans", false, "Sylvester orbit mismatch at index " + std::to_string(i), t);

  // (b) Fermat hit scan
  DynamicalSystem squares({BigInt(0), BigInt(0), BigInt(1)}, Rational(-1), Rational(2));
  const std::uint64_t hit_limit = opts.quick ? 20'000 : 100'000;
  ScanReport hits = hits_scan(squares, 3, hit_limit, opts.jobs);
  std::set<std::uint64_t> hit_primes;
  for (const auto& r : hits.records) {
    if (r.outcome != "hit") continue;
    hit_primes.insert(r.p);
    // p = 1 mod 2^(n+1)
    std::uint64_t mod = 1ULL << (r.hit_n + 1);
    if (r.p % mod != 1)
      return finish("scans", false, "hit p=" + std::to_string(r.p) + " violates p=1 mod 2^(n+1)",
                    t);
  }
  // independent Fermat-divisor check
  std::set<std::uint64_t> fermat_primes;
  for (std::uint64_t p : primes_in_range(3, hit_limit)) {
    std::uint64_t v = 2 % p;
    for (int k = 0; k <= 24; ++k) {
      v = mulmod(v, v, p); // v = 2^(2^(k+1))
      if (v == p - 1) {
        fermat_primes.insert(p);
        break;
      }
      if (v == 1) break;
    }
  }
  if (hit_primes != fermat_primes)
    return finish("scans", false, "hit set differs from Fermat divisor set", t);
  log << "Fermat divisors <= " << hit_limit << ": " << hit_primes.size() << " primes";

  // (c) Sylvester hit density per decade
  int last_decade = opts.quick ? 4 : 5;
  Rational prev;
  bool first = true;
  for (int k = 2; k <= last_decade; ++k) {
    std::uint64_t lo = 1;
    for (int i = 0; i < k; ++i) lo *= 10;
    std::uint64_t hi = lo * 10 - 1;
    ScanReport rep = hits_scan(sylvester, lo, hi, opts.jobs);
    Density d = density(rep);
    log << "; decade 10^" << k << ": " << rational_str(d.value);
    if (!first && !(d.value <= prev))
      return finish("scans", false, log.str() + " (density increased across decades)", t);
    if (k == last_decade && !(d.value <= Rational(3, 20)))
      return finish("scans", false, log.str() + " (last decade above 0.15)", t);
    prev = d.value;
    first = false;
  }
  return finish("scans", true, log.str(), t);
}

// ------------------------------------------- criterion 8: Chebotarev fit

CheckResult check_chebotarev(const VerifyOptions& opts) {
  Timer t;
  DynamicalSystem sys({BigInt(1), BigInt(-1), BigInt(1)}, Rational(5), Rational(0));
  const std::uint64_t limit = opts.quick ? 20'000 : 100'000;

  ScanReport rep1 = frobenius_statistics(sys, 1, 2, limit, opts.jobs);
  PatternDistribution d1 = empirical_pattern_distribution(rep1);
  Rational split = d1.count({1, 1}) ? d1.at({1, 1}) : Rational(0);
  Rational inert = d1.count({2}) ? d1.at({2}) : Rational(0);
  auto near_half = [](const Rational& q) {
    return abs(q - Rational(1, 2)) <= Rational(1, 50);
  };
  if (!near_half(split) || !near_half(inert))
    return finish("chebotarev", false,
                  "n=1 frequencies " + rational_str(split) + ", " + rational_str(inert) +
                      " not within 0.02 of 1/2",
                  t);

  ScanReport rep2 = frobenius_statistics(sys, 2, 2, limit, opts.jobs);
  PatternDistribution d2 = empirical_pattern_distribution(rep2);
  SubgroupFit fit = best_fitting_transitive_subgroup(d2, WreathTower::parse("S2^2"));
  if (!(fit.tv <= Rational(3, 100)))
    return finish("chebotarev", false,
                  "n=2 best fit " + fit.description + " TV " + rational_str(fit.tv) + " > 0.03",
                  t);
  return finish("chebotarev", true,
                "n=1 split/inert near 1/2; n=2 best-fitting transitive subgroup " +
                    fit.description + " of order " + fit.order.get_str() + ", TV = " +
                    rational_str(fit.tv),
                t);
}

// ------------------------------------------- criterion 9: obstructions

CheckResult check_obstructions(const VerifyOptions&) {
  Timer t;
  auto cases = obstruction_test_set();
  for (const auto& c : cases) {
    std::uint32_t blocks = c.group.degree() / 5;
    BlockSystem b = block_partition(blocks, 5);
    bool large = is_large_kernel(c.group, b, 5);
    if (large != c.expect_large)
      return finish("obstructions", false, c.name + ": largeness flag wrong", t);
    if (c.expect_parts > 0) {
      BlockSystem parts = socle_partition(c.group, b, 5);
      if (parts.block_count() != c.expect_parts)
        return finish("obstructions", false,
                      c.name + ": socle partition has " + std::to_string(parts.block_count()) +
                          " parts, expected " + std::to_string(c.expect_parts),
                      t);
      bool singles = parts.block_count() == blocks;
      if (singles != large)
        return finish("obstructions", false,
                      c.name + ": singleton partition iff large kernel violated", t);
    }
    // element diagonality consequence on diagonal kernels
    PermGroup kernel = block_kernel(c.group, b);
    if (c.expect_diagonal_kernel) {
      if (!is_diagonal_subgroup(kernel, b))
        return finish("obstructions", false, c.name + ": kernel not diagonal", t);
      bool all_diag = true;
      kernel.for_each_element([&](const Perm& k) {
        std::vector<Perm> comps;
        for (const auto& blk : b.blocks) {
          std::vector<std::uint32_t> im(5);
          for (std::uint32_t i = 0; i < 5; ++i) im[i] = k(blk[i]) - blk[0];
          comps.push_back(Perm(im));
        }
        if (!is_diagonal_element(comps)) {
          all_diag = false;
          return false;
        }
        return true;
      });
      if (!all_diag)
        return finish("obstructions", false, c.name + ": nondiagonal element in diagonal kernel",
                      t);
    }
  }
  // the product-action counterexample to conjugation compatibility
  ConjugationCounterexample ce = build_conjugation_counterexample(5);
  if (ce.product_group.order() != BigInt(1296000))
    return finish("obstructions", false, "counterexample group order wrong", t);
  if (block_kernel(ce.product_group, ce.product_blocks).order() != BigInt(216000))
    return finish("obstructions", false, "counterexample block kernel order wrong", t);
  if (partitions_compatible(ce.flag_group, ce.flag_p, ce.flag_pj))
    return finish("obstructions", false, "counterexample partitions wrongly compatible", t);
  // trivial partitions are always compatible
  BlockSystem singles = BlockSystem::from_classes({0, 1, 2, 3, 4, 5});
  if (!partitions_compatible(ce.flag_group, singles, ce.flag_pj))
    return finish("obstructions", false, "trivial partition not compatible", t);
  return finish("obstructions", true,
                std::to_string(cases.size()) +
                    " constructed groups behave; product-action counterexample incompatible",
                t);
}

// ------------------------------------------- criterion 10: belyi oracle

std::vector<std::array<std::uint32_t, 4>> admissible_tuples(std::uint32_t d) {
  std::vector<std::array<std::uint32_t, 4>> out;
  for (std::uint32_t s = 1; s < d; ++s)
    for (std::uint32_t q = 1; q * s < d; ++q) {
      std::uint32_t t = d - q * s;
      std::uint32_t r = q + 1;
      if (belyi_family_check(d, r, s, t).admissible) out.push_back({d, r, s, t});
    }
  return out;
}

CheckResult check_belyi(const VerifyOptions& opts) {
  Timer t;
  std::uint64_t exhaustive_triples = 0, sampled_triples = 0;
  for (std::uint32_t d = 4; d <= 6; ++d)
    for (auto [dd, r, s, tt] : admissible_tuples(d)) {
      TripleOracleVerdict v = triple_primitivity_oracle(dd, r, s, tt);
      exhaustive_triples += v.triples_checked;
      if (!v.all_primitive)
        return finish("belyi", false,
                      "counterexample at d=" + std::to_string(dd) + " r=" + std::to_string(r) +
                          " s=" + std::to_string(s) + " t=" + std::to_string(tt),
                      t);
    }
  const std::uint64_t samples = opts.quick ? 1'000 : 10'000;
  for (std::uint32_t d = 7; d <= 12; ++d)
    for (auto [dd, r, s, tt] : admissible_tuples(d)) {
      TripleOracleVerdict v =
          triple_primitivity_oracle(dd, r, s, tt, SampledMode{samples, 7777 + d});
      sampled_triples += v.triples_checked;
      if (!v.all_primitive)
        return finish("belyi", false,
                      "sampled counterexample at d=" + std::to_string(dd), t);
    }

  // Shabat construction property sweep
  Rng rng(424242);
  for (std::uint32_t d = 5; d <= 20; ++d) {
    for (int i = 0; i < 10'000; ++i) {
      Perm sigma = uniform_symmetric(d, rng);
      Perm tau = shabat_tau(sigma);
      Perm prod = compose(sigma, tau);
      if (prod.cycle_count() != 1)
        return finish("belyi", false, "shabat product not a full cycle at d=" + std::to_string(d),
                      t);
      RamificationType rt(d, {CycleType({d}), cycle_type(sigma), cycle_type(tau)});
      if (!is_polynomial_type(rt))
        return finish("belyi", false, "shabat triple not polynomial type", t);
      if (rh_genus(0, rt) != 0)
        return finish("belyi", false, "shabat triple genus nonzero", t);
    }
  }
  return finish("belyi", true,
                "no primitivity counterexamples (" + std::to_string(exhaustive_triples) +
                    " exhaustive, " + std::to_string(sampled_triples) +
                    " sampled); shabat property holds for 10^4 draws per degree 5..20",
                t);
}

// ------------------------------------------- criterion 11: splitting

CheckResult check_splitting(const VerifyOptions& opts) {
  Timer t;
  std::string dir = workdir(opts);
  std::ostringstream log;
  std::uint32_t d_lo = opts.splitting_d.value_or(5);
  std::uint32_t d_hi = opts.splitting_d.value_or(7);
  for (std::uint32_t d = d_lo; d <= d_hi; ++d) {
    for (const auto& k : invariant_submodules(d)) {
      SplittingCertificate cert = splitting_certificate(d, k);
      if (cert.groups_found == 0)
        return finish("splitting", false,
                      "no groups found for d=" + std::to_string(d) + " kernel " +
                          k.label_string(),
                      t);
      if (!cert.all_split)
        return finish("splitting", false,
                      "section missing for d=" + std::to_string(d) + " kernel " +
                          k.label_string(),
                      t);
      std::string path =
          dir + "/splitting-d" + std::to_string(d) + "-" + k.label_string() + ".json";
      write_text_file(path, cert.to_json().dump(2) + "\n");
      SplittingCertificate reread =
          SplittingCertificate::from_json(nlohmann::json::parse(read_text_file(path)));
      if (!verify_certificate(reread))
        return finish("splitting", false, "certificate failed re-verification: " + path, t);
      log << "d" << d << "/" << k.label_string() << ":" << cert.groups_found << " ";
    }
  }
  return finish("splitting", true,
                "all sections found; certificates re-verify under " + dir + " (" + log.str() + ")",
                t);
}

// ------------------------------------------- criterion 12: reproducibility

CheckResult check_repro(const VerifyOptions& opts) {
  Timer t;
  std::string dir = workdir(opts);
  nlohmann::json cfg_json{{"f", {0, 0, 1}}, {"a", "-1"},   {"a0", "2"},
                          {"mode", "hits"}, {"primes", {{"from", 2}, {"to", 2000}}}};
  ExperimentConfig cfg = ExperimentConfig::from_json(cfg_json);
  RunManifest manifest = RunManifest::make("scan hits", cfg.to_json());

  ScanReport rep = run_experiment(cfg, opts.jobs);
  std::string payload = rep.to_json().dump(2) + "\n";
  write_text_file(dir + "/repro-first.json", payload);

  // replay from the manifest parameters alone
  ExperimentConfig replay_cfg = ExperimentConfig::from_json(manifest.parameters);
  ScanReport replay = run_experiment(replay_cfg, opts.jobs);
  std::string replay_payload = replay.to_json().dump(2) + "\n";
  write_text_file(dir + "/repro-replay.json", replay_payload);
  if (payload != replay_payload)
    return finish("repro", false, "replayed output differs byte-for-byte", t);

  // manifest hash must ignore the timestamp
  RunManifest later = manifest;
  later.created_at = "1970-01-01T00:00:00Z";
  if (manifest.payload_hash() != later.payload_hash())
    return finish("repro", false, "manifest hash depends on the timestamp", t);

  // split-merge equals combined
  ScanReport whole = hits_scan(cfg.system, 2, 2000, opts.jobs);
  ScanReport left = hits_scan(cfg.system, 2, 999, opts.jobs);
  ScanReport right = hits_scan(cfg.system, 1000, 2000, opts.jobs);
  ScanReport merged = merge_reports(left, right);
  if (merged.to_json().dump() != whole.to_json().dump())
    return finish("repro", false, "merged disjoint scans differ from the combined scan", t);
  return finish("repro", true, "byte-identical replay; disjoint merge equals combined scan", t);
}

} // namespace

std::vector<std::string> all_check_names() {
  return {"olds",       "alpha",      "towers", "recursion",    "few-cycles", "factor-count",
          "scans",      "chebotarev", "obstructions", "belyi",  "splitting",  "repro"};
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const VerifyOptions& opts) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") {
      auto all = all_check_names();
      expanded.insert(expanded.end(), all.begin(), all.end());
    } else {
      expanded.push_back(n);
    }
  }
  std::vector<CheckResult> results;
  for (const auto& name : expanded) {
    CheckResult r;
    try {
      if (name == "olds")
        r = check_olds(opts);
      else if (name == "alpha")
        r = check_alpha(opts);
      else if (name == "towers")
        r = check_towers(opts);
      else if (name == "recursion")
        r = check_recursion(opts);
      else if (name == "few-cycles")
        r = check_few_cycles(opts);
      else if (name == "factor-count")
        r = check_factor_count(opts);
      else if (name == "scans")
        r = check_scans(opts);
      else if (name == "chebotarev")
        r = check_chebotarev(opts);
      else if (name == "obstructions")
        r = check_obstructions(opts);
      else if (name == "belyi")
        r = check_belyi(opts);
      else if (name == "splitting")
        r = check_splitting(opts);
      else if (name == "repro")
        r = check_repro(opts);
      else
        r = {name, false, "unknown check", 0.0};
    } catch (const std::exception& e) {
      r = {name, false, std::string("exception: ") + e.what(), 0.0};
    }
    results.push_back(std::move(r));
  }
  return results;
}

// ---------------------------------------------------------------------
// independent factorization oracle (Cantor-Zassenhaus over its own
// arithmetic; shares nothing with the FpPoly counting path)

namespace oracle {

using Poly = std::vector<std::uint64_t>; // coefficient i of x^i, trimmed

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::uint64_t pmul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (static_cast<unsigned __int128>(a) * b) % p;
}

std::uint64_t pinv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = pmul(r, a, p);
    a = pmul(a, a, p);
    e >>= 1;
  }
  return r;
}

Poly pmulpoly(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + pmul(a[i], b[j], p)) % p;
  return trim(c);
}

Poly pmod(Poly a, const Poly& m, std::uint64_t p) {
  a = trim(a);
  std::uint64_t inv = pinv(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t f = pmul(a.back(), inv, p);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + p - pmul(f, m[i], p)) % p;
    a = trim(a);
  }
  return a;
}

Poly pdiv(Poly a, const Poly& m, std::uint64_t p) {
  a = trim(a);
  if (a.size() < m.size()) return {};
  Poly q(a.size() - m.size() + 1, 0);
  std::uint64_t inv = pinv(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t f = pmul(a.back(), inv, p);
    std::size_t shift = a.size() - m.size();
    q[shift] = f;
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + p - pmul(f, m[i], p)) % p;
    a = trim(a);
  }
  return trim(q);
}

Poly pgcd(Poly a, Poly b, std::uint64_t p) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = b;
    b = r;
  }
  if (!a.empty() && a.back() != 1) {
    std::uint64_t inv = pinv(a.back(), p);
    for (auto& c : a) c = pmul(c, inv, p);
  }
  return a;
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = pmod(base, m, p);
  while (e) {
    if (e & 1) r = pmod(pmulpoly(r, base, p), m, p);
    base = pmod(pmulpoly(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly derivative(const Poly& a, std::uint64_t p) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(pmul(a[i], i % p, p));
  return trim(d);
}

// full factorization into irreducibles (with multiplicity), recursive
void factor_into(Poly f, std::uint64_t p, Rng& rng, std::vector<Poly>& out) {
  f = trim(f);
  if (f.size() <= 1) return;
  // make monic
  if (f.back() != 1) {
    std::uint64_t inv = pinv(f.back(), p);
    for (auto& c : f) c = pmul(c, inv, p);
  }
  // multiplicity handling: pull out gcd with derivative
  Poly d = derivative(f, p);
  if (d.empty()) {
    // p-th power: take the p-th root and recurse (coefficients fixed by Frobenius)
    Poly root;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p)) root.push_back(f[i]);
    std::vector<Poly> sub;
    factor_into(root, p, rng, sub);
    for (const auto& g : sub)
      for (std::uint64_t i = 0; i < p; ++i) out.push_back(g);
    return;
  }
  Poly g = pgcd(f, d, p);
  if (g.size() > 1) {
    factor_into(g, p, rng, out);
    factor_into(pdiv(f, g, p), p, rng, out);
    return;
  }
  // f squarefree: distinct-degree then equal-degree splitting
  Poly h{0, 1}; // x
  std::uint64_t k = 0;
  Poly rest = f;
  while (rest.size() > 1) {
    ++k;
    if (2 * k + 1 > rest.size()) {
      out.push_back(rest);
      break;
    }
    h = ppowmod(h, p, rest, p);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    Poly dk = pgcd(rest, trim(hx), p);
    if (dk.size() > 1) {
      // split the degree-k part into irreducibles
      std::vector<Poly> stack{dk};
      while (!stack.empty()) {
        Poly cur = stack.back();
        stack.pop_back();
        if (cur.size() - 1 == k) {
          out.push_back(cur);
          continue;
        }
        // Cantor-Zassenhaus split
        for (;;) {
          Poly r(cur.size() - 1);
          for (auto& c : r) c = rng.next_below(p);
          r = trim(r);
          if (r.empty()) continue;
          Poly w;
          if (p == 2) {
            // trace map sum r^(2^i)
            w = r;
            Poly acc = r;
            for (std::uint64_t i = 1; i < k; ++i) {
              acc = pmod(pmulpoly(acc, acc, p), cur, p);
              Poly sum(std::max(w.size(), acc.size()), 0);
              for (std::size_t j = 0; j < sum.size(); ++j) {
                std::uint64_t a1 = j < w.size() ? w[j] : 0;
                std::uint64_t a2 = j < acc.size() ? acc[j] : 0;
                sum[j] = (a1 + a2) % p;
              }
              w = trim(sum);
            }
          } else {
            std::uint64_t e = 1;
            for (std::uint64_t i = 0; i < k; ++i) e *= p;
            w = ppowmod(r, (e - 1) / 2, cur, p);
            if (!w.empty()) w[0] = (w[0] + p - 1) % p;
            w = trim(w);
          }
          Poly split = pgcd(cur, w, p);
          if (split.size() > 1 && split.size() < cur.size()) {
            stack.push_back(split);
            stack.push_back(pdiv(cur, split, p));
            break;
          }
        }
      }
      rest = pdiv(rest, dk, p);
      h = pmod(h, rest, p);
    }
  }
}

} // namespace oracle

std::uint64_t independent_factor_count(std::uint64_t p, const std::vector<std::uint64_t>& coeffs,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<oracle::Poly> factors;
  oracle::factor_into(coeffs, p, rng, factors);
  std::set<oracle::Poly> distinct(factors.begin(), factors.end());
  return distinct.size();
}

// ---------------------------------------------------------------- test set

std::vector<ObstructionCase> obstruction_test_set() {
  const std::uint32_t d = 5;
  auto a5 = PermGroup::alternating(d).generators();
  auto s5 = PermGroup::symmetric(d).generators();
  std::vector<ObstructionCase> out;

  auto two_block = [&](std::uint32_t blocks) { return blocks * d; };
  (void)two_block;

  // 1. full A5 wr A5 (five blocks)
  out.push_back({"full-[A5]^2", tower_group(WreathTower::parse("A5*A5")), true, false, 5});

  // 2. diagonal construction inside A5 wr S2
  {
    std::vector<Perm> gens;
    for (const auto& g : a5) gens.push_back(on_blocks_diagonal(2, {0, 1}, g, {}));
    gens.push_back(block_shuffle(2, d, Perm::transposition(2, 0, 1)));
    out.push_back({"diag-A5-wr-S2", PermGroup(2 * d, gens), false, true, 1});
  }

  // 3. full A5 wr S2
  {
    std::vector<Perm> gens;
    for (const auto& g : a5) {
      gens.push_back(on_block(2, 0, g));
      gens.push_back(on_block(2, 1, g));
    }
    gens.push_back(block_shuffle(2, d, Perm::transposition(2, 0, 1)));
    out.push_back({"full-A5-wr-S2", PermGroup(2 * d, gens), true, false, 2});
  }

  // 4. full S5 wr S2
  {
    std::vector<Perm> gens;
    for (const auto& g : s5) {
      gens.push_back(on_block(2, 0, g));
      gens.push_back(on_block(2, 1, g));
    }
    gens.push_back(block_shuffle(2, d, Perm::transposition(2, 0, 1)));
    out.push_back({"full-S5-wr-S2", PermGroup(2 * d, gens), true, false, 2});
  }

  // 5. twisted diagonal: second component conjugated by a transposition
  {
    std::vector<Perm> gens;
    Perm twist = Perm::transposition(d, 0, 1);
    for (const auto& g : a5)
      gens.push_back(on_blocks_diagonal(2, {0, 1}, g, {Perm::identity(d), twist}));
    gens.push_back(block_shuffle(2, d, Perm::transposition(2, 0, 1)));
    out.push_back({"twisted-diag-A5-wr-S2", PermGroup(2 * d, gens), false, true, 1});
  }

  // 6. A5 x diag(A5^2) on three blocks, top swapping blocks 1 and 2
  {
    std::vector<Perm> gens;
    for (const auto& g : a5) {
      gens.push_back(on_block(3, 0, g));
      gens.push_back(on_blocks_diagonal(3, {1, 2}, g, {}));
    }
    gens.push_back(block_shuffle(3, d, Perm::transposition(3, 1, 2)));
    out.push_back({"A5-x-diag-top-swap", PermGroup(3 * d, gens), false, false, 2});
  }

  // 7. diag(A5^3) with rotating top
  {
    std::vector<Perm> gens;
    for (const auto& g : a5) gens.push_back(on_blocks_diagonal(3, {0, 1, 2}, g, {}));
    gens.push_back(block_shuffle(3, d, Perm::cycle(3, {0, 1, 2})));
    out.push_back({"diag-A5^3-rotating", PermGroup(3 * d, gens), false, true, 1});
  }

  // 8. full A5^3 with rotating top
  {
    std::vector<Perm> gens;
    for (std::uint32_t b = 0; b < 3; ++b)
      for (const auto& g : a5) gens.push_back(on_block(3, b, g));
    gens.push_back(block_shuffle(3, d, Perm::cycle(3, {0, 1, 2})));
    out.push_back({"full-A5^3-rotating", PermGroup(3 * d, gens), true, false, 3});
  }

  // 9. sign-locked S5^2: pairs with equal parity, plus the swap
  {
    std::vector<Perm> gens;
    for (const auto& g : a5) {
      gens.push_back(on_block(2, 0, g));
      gens.push_back(on_block(2, 1, g));
    }
    Perm odd = Perm::transposition(d, 0, 1);
    gens.push_back(on_blocks_diagonal(2, {0, 1}, odd, {}));
    gens.push_back(block_shuffle(2, d, Perm::transposition(2, 0, 1)));
    out.push_back({"sign-locked-S5^2", PermGroup(2 * d, gens), true, false, 2});
  }

  // 10. intransitive A5 x A5, no top group
  {
    std::vector<Perm> gens;
    for (const auto& g : a5) {
      gens.push_back(on_block(2, 0, g));
      gens.push_back(on_block(2, 1, g));
    }
    out.push_back({"A5-x-A5-no-top", PermGroup(2 * d, gens), true, false, 2});
  }

  // 11. abelian per-block groups: C5 wr S2 (largeness must fail; no partition)
  {
    std::vector<Perm> gens;
    Perm five = Perm::cycle(d, {0, 1, 2, 3, 4});
    gens.push_back(on_block(2, 0, five));
    gens.push_back(on_block(2, 1, five));
    gens.push_back(block_shuffle(2, d, Perm::transposition(2, 0, 1)));
    out.push_back({"C5-wr-S2", PermGroup(2 * d, gens), false, false, 0});
  }

  return out;
}

} // namespace arborlab
