#include "arborlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "arborlab/cycle_stats.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/primes.hpp"

namespace arborlab {

DynamicalSystem::DynamicalSystem(std::vector<BigInt> coeffs, Rational target, Rational seed)
    : f(std::move(coeffs)), a(std::move(target)), a0(std::move(seed)) {
  if (f.size() < 3) throw InvalidArgumentError("dynamical system needs degree >= 2");
  if (f.back() == 0) throw InvalidArgumentError("leading coefficient must be nonzero");
}

Rational DynamicalSystem::apply(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + Rational(f[i]);
  acc.canonicalize();
  return acc;
}

std::optional<FpPoly> DynamicalSystem::reduce(std::uint64_t p) const {
  std::vector<std::uint64_t> c;
  c.reserve(f.size());
  for (const auto& coeff : f) {
    BigInt r = coeff % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    c.push_back(r.get_ui());
  }
  if (c.back() == 0) return std::nullopt;
  return FpPoly(p, std::move(c));
}

std::vector<BigInt> DynamicalSystem::parse_coeffs(const std::string& s) {
  std::vector<BigInt> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty()) continue;
    out.emplace_back(tok);
  }
  if (out.empty()) throw ParseError("empty coefficient list");
  return out;
}

std::string DynamicalSystem::coeffs_string() const {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += f[i].get_str();
  }
  return s;
}

std::vector<Rational> orbit(const DynamicalSystem& sys, std::uint64_t n, std::uint64_t bit_cap) {
  std::vector<Rational> out{sys.a0};
  out.reserve(n + 1);
  for (std::uint64_t k = 1; k <= n; ++k) {
    Rational next = sys.apply(out.back());
    std::size_t bits = mpz_sizeinbase(next.get_num().get_mpz_t(), 2) +
                       mpz_sizeinbase(next.get_den().get_mpz_t(), 2);
    if (bits > bit_cap)
      throw GrowthCapError("orbit value exceeded bit cap at iterate " + std::to_string(k),
                           static_cast<long>(k));
    out.push_back(std::move(next));
  }
  return out;
}

namespace {

// value of a rational mod p, when the denominator is a unit
std::optional<std::uint64_t> rational_mod_p(const Rational& q, std::uint64_t p) {
  BigInt num = q.get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  BigInt den = q.get_den() % static_cast<unsigned long>(p);
  if (den == 0) return std::nullopt;
  return mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
}

} // namespace

HitResult orbit_hits_mod_p(const DynamicalSystem& sys, std::uint64_t p) {
  if (!is_prime_u64(p)) throw InvalidArgumentError("orbit_hits_mod_p needs a prime");
  auto x0 = rational_mod_p(sys.a0, p);
  auto target = rational_mod_p(sys.a, p);
  if (!x0 || !target)
    return {HitOutcome::Skipped, 0, "denominator of a0 or a vanishes mod p"};
  auto fp = sys.reduce(p);
  std::vector<std::uint64_t> coeffs_mod; // used when the leading coeff vanished
  if (!fp) {
    for (const auto& c : sys.f) {
      BigInt r = c % static_cast<unsigned long>(p);
      if (r < 0) r += static_cast<unsigned long>(p);
      coeffs_mod.push_back(r.get_ui());
    }
  }
  auto step = [&](std::uint64_t x) {
    if (fp) return fp->evaluate(x);
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_mod.size(); i-- > 0;)
      acc = (mulmod(acc, x, p) + coeffs_mod[i]) % p;
    return acc;
  };

  // Brent's cycle detection gives the number of distinct orbit values
  std::uint64_t lam = 1, power = 1;
  std::uint64_t tortoise = *x0, hare = step(*x0);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
  }
  std::uint64_t mu = 0;
  tortoise = *x0;
  hare = *x0;
  for (std::uint64_t i = 0; i < lam; ++i) hare = step(hare);
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  const std::uint64_t distinct = mu + lam;

  std::uint64_t x = *x0;
  for (std::uint64_t n = 1; n <= distinct; ++n) {
    x = step(x);
    if (x == *target) return {HitOutcome::Hit, n, ""};
  }
  return {HitOutcome::NoHit, 0, ""};
}

nlohmann::json PrimeRecord::to_json() const {
  nlohmann::json j{{"p", p}, {"outcome", outcome}};
  if (skipped) j["skipped"] = true;
  if (matches) j["matches"] = true;
  if (outcome == "hit") j["n"] = hit_n;
  if (!factor_counts.empty()) j["factor_counts"] = factor_counts;
  if (c_stable_up_to) j["c_stable_up_to"] = c_stable_up_to;
  if (!pattern.empty()) j["pattern"] = pattern;
  if (nonsquarefree) j["nonsquarefree"] = true;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

PrimeRecord PrimeRecord::from_json(const nlohmann::json& j) {
  PrimeRecord r;
  r.p = j.at("p").get<std::uint64_t>();
  r.outcome = j.at("outcome").get<std::string>();
  r.skipped = j.value("skipped", false);
  r.matches = j.value("matches", false);
  r.hit_n = j.value("n", 0ULL);
  r.factor_counts = j.value("factor_counts", std::vector<std::uint32_t>{});
  r.c_stable_up_to = j.value("c_stable_up_to", 0U);
  r.pattern = j.value("pattern", std::vector<std::uint32_t>{});
  r.nonsquarefree = j.value("nonsquarefree", false);
  r.detail = j.value("detail", std::string{});
  return r;
}

std::uint64_t ScanReport::skipped() const {
  return static_cast<std::uint64_t>(
      std::count_if(records.begin(), records.end(), [](const PrimeRecord& r) { return r.skipped; }));
}

std::uint64_t ScanReport::matching() const {
  return static_cast<std::uint64_t>(
      std::count_if(records.begin(), records.end(), [](const PrimeRecord& r) { return r.matches; }));
}

std::map<std::vector<std::uint32_t>, std::uint64_t> ScanReport::pattern_counts() const {
  std::map<std::vector<std::uint32_t>, std::uint64_t> out;
  for (const auto& r : records)
    if (!r.skipped && !r.pattern.empty()) ++out[r.pattern];
  return out;
}

nlohmann::json ScanReport::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) recs.push_back(r.to_json());
  return {{"mode", mode},
          {"range", {{"from", from}, {"to", to}}},
          {"parameters", parameters},
          {"aggregates",
           {{"scanned", scanned()}, {"skipped", skipped()}, {"matching", matching()}}},
          {"records", recs}};
}

ScanReport ScanReport::from_json(const nlohmann::json& j) {
  ScanReport rep;
  rep.mode = j.at("mode").get<std::string>();
  rep.from = j.at("range").at("from").get<std::uint64_t>();
  rep.to = j.at("range").at("to").get<std::uint64_t>();
  rep.parameters = j.at("parameters");
  for (const auto& r : j.at("records")) rep.records.push_back(PrimeRecord::from_json(r));
  return rep;
}

std::string ScanReport::to_csv() const {
  std::string s = "p,outcome,detail\n";
  for (const auto& r : records) {
    std::string detail = r.detail;
    if (r.outcome == "hit") detail = "n=" + std::to_string(r.hit_n);
    if (!r.pattern.empty()) {
      detail = "[";
      for (std::size_t i = 0; i < r.pattern.size(); ++i) {
        if (i) detail += ' ';
        detail += std::to_string(r.pattern[i]);
      }
      detail += "]";
    }
    s += std::to_string(r.p) + "," + r.outcome + "," + detail + "\n";
  }
  return s;
}

ScanReport merge_reports(const ScanReport& a, const ScanReport& b) {
  if (a.mode != b.mode) throw InvalidArgumentError("merging reports of different modes");
  const ScanReport& lo = a.from <= b.from ? a : b;
  const ScanReport& hi = a.from <= b.from ? b : a;
  if (lo.to >= hi.from) throw InvalidArgumentError("merging overlapping prime ranges");
  ScanReport out;
  out.mode = a.mode;
  out.from = lo.from;
  out.to = hi.to;
  out.parameters = lo.parameters;
  if (out.parameters.contains("primes")) {
    out.parameters["primes"]["from"] = out.from;
    out.parameters["primes"]["to"] = out.to;
  }
  out.records = lo.records;
  out.records.insert(out.records.end(), hi.records.begin(), hi.records.end());
  return out;
}

Density density(const ScanReport& report) {
  if (report.records.empty()) throw InvalidArgumentError("density of an empty scan");
  std::uint64_t counted = report.scanned() - report.skipped();
  if (counted == 0) throw InvalidArgumentError("density undefined: all primes skipped");
  Density d;
  d.matching = report.matching();
  d.counted = counted;
  d.value = Rational(BigInt(static_cast<unsigned long>(d.matching)),
                     BigInt(static_cast<unsigned long>(counted)));
  d.value.canonicalize();
  return d;
}

namespace {

// shards the prime list and runs `per_prime` on every prime, in order
std::vector<PrimeRecord> sharded_scan(std::uint64_t from, std::uint64_t to, unsigned jobs,
                                      const std::function<PrimeRecord(std::uint64_t)>& per_prime) {
  std::vector<std::uint64_t> ps = primes_in_range(from, to);
  if (jobs <= 1 || ps.size() < 64) {
    std::vector<PrimeRecord> out;
    out.reserve(ps.size());
    for (auto p : ps) out.push_back(per_prime(p));
    return out;
  }
  const std::size_t shards = std::min<std::size_t>(jobs, ps.size());
  std::vector<std::vector<PrimeRecord>> parts(shards);
  std::vector<std::thread> workers;
  for (std::size_t s = 0; s < shards; ++s) {
    workers.emplace_back([&, s] {
      std::size_t lo = ps.size() * s / shards;
      std::size_t hi = ps.size() * (s + 1) / shards;
      parts[s].reserve(hi - lo);
      for (std::size_t i = lo; i < hi; ++i) parts[s].push_back(per_prime(ps[i]));
    });
  }
  for (auto& w : workers) w.join();
  std::vector<PrimeRecord> out;
  out.reserve(ps.size());
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

} // namespace

ScanReport hits_scan(const DynamicalSystem& sys, std::uint64_t from, std::uint64_t to,
                     unsigned jobs) {
  ScanReport rep;
  rep.mode = "hits";
  rep.from = from;
  rep.to = to;
  rep.parameters = {{"f", sys.coeffs_string()},
                    {"a", rational_str(sys.a)},
                    {"a0", rational_str(sys.a0)},
                    {"mode", "hits"},
                    {"primes", {{"from", from}, {"to", to}}}};
  rep.records = sharded_scan(from, to, jobs, [&](std::uint64_t p) {
    PrimeRecord r;
    r.p = p;
    HitResult h = orbit_hits_mod_p(sys, p);
    switch (h.outcome) {
    case HitOutcome::Hit:
      r.outcome = "hit";
      r.matches = true;
      r.hit_n = h.n;
      break;
    case HitOutcome::NoHit:
      r.outcome = "no-hit";
      break;
    case HitOutcome::Skipped:
      r.outcome = "skipped";
      r.skipped = true;
      r.detail = h.skip_reason;
      break;
    }
    return r;
  });
  return rep;
}

ScanReport c_stability_scan(const DynamicalSystem& sys, std::uint32_t c_bound,
                            std::uint32_t n_max, std::uint64_t from, std::uint64_t to,
                            unsigned jobs) {
  if (c_bound < 1 || n_max < 1) throw InvalidArgumentError("stability scan needs C, n_max >= 1");
  ScanReport rep;
  rep.mode = "stability";
  rep.from = from;
  rep.to = to;
  rep.parameters = {{"f", sys.coeffs_string()},
                    {"a", rational_str(sys.a)},
                    {"a0", rational_str(sys.a0)},
                    {"mode", "stability"},
                    {"C", c_bound},
                    {"n_max", n_max},
                    {"primes", {{"from", from}, {"to", to}}}};
  rep.records = sharded_scan(from, to, jobs, [&](std::uint64_t p) {
    PrimeRecord r;
    r.p = p;
    auto fp = sys.reduce(p);
    auto target = rational_mod_p(sys.a, p);
    if (!fp || !target) {
      r.outcome = "skipped";
      r.skipped = true;
      r.detail = !fp ? "leading coefficient vanishes mod p" : "denominator of a vanishes mod p";
      return r;
    }
    FpPoly iterate = *fp;
    bool all_within = true;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      if (n > 1) iterate = compose(iterate, *fp);
      FpPoly shifted = sub(iterate, FpPoly::constant(p, *target));
      FpPoly rad = radical(shifted);
      if (rad.degree() < shifted.degree()) r.nonsquarefree = true;
      auto count = static_cast<std::uint32_t>(factor_count_mod_p(shifted));
      r.factor_counts.push_back(count);
      if (count <= c_bound && all_within)
        r.c_stable_up_to = n;
      else
        all_within = false;
    }
    r.matches = all_within;
    r.outcome = all_within ? "stable" : "unstable";
    return r;
  });
  return rep;
}

ScanReport frobenius_statistics(const DynamicalSystem& sys, std::uint32_t n, std::uint64_t from,
                                std::uint64_t to, unsigned jobs) {
  double degn = std::pow(static_cast<double>(sys.degree()), static_cast<double>(n));
  if (degn > 64.0) throw OrderCapError("frobenius statistics capped at iterate degree 64");
  ScanReport rep;
  rep.mode = "frobenius";
  rep.from = from;
  rep.to = to;
  rep.parameters = {{"f", sys.coeffs_string()},
                    {"a", rational_str(sys.a)},
                    {"a0", rational_str(sys.a0)},
                    {"mode", "frobenius"},
                    {"n", n},
                    {"primes", {{"from", from}, {"to", to}}}};
  rep.records = sharded_scan(from, to, jobs, [&](std::uint64_t p) {
    PrimeRecord r;
    r.p = p;
    auto fp = sys.reduce(p);
    auto target = rational_mod_p(sys.a, p);
    if (!fp || !target) {
      r.outcome = "skipped";
      r.skipped = true;
      r.detail = !fp ? "leading coefficient vanishes mod p" : "denominator of a vanishes mod p";
      return r;
    }
    FpPoly iterate = FpPoly::x(p);
    for (std::uint32_t k = 0; k < n; ++k) iterate = compose(iterate, *fp);
    FpPoly shifted = sub(iterate, FpPoly::constant(p, *target));
    if (shifted.is_zero()) {
      r.outcome = "skipped";
      r.skipped = true;
      r.detail = "iterate collapses mod p";
      return r;
    }
    FpPoly rad = radical(shifted);
    if (rad.degree() < shifted.degree()) r.nonsquarefree = true;
    r.pattern = factor_degree_multiset(shifted);
    r.outcome = "pattern";
    r.matches = true;
    return r;
  });
  return rep;
}

PatternDistribution empirical_pattern_distribution(const ScanReport& report) {
  auto counts = report.pattern_counts();
  std::uint64_t total = 0;
  for (const auto& [k, c] : counts) total += c;
  if (total == 0) throw InvalidArgumentError("no patterns in report");
  PatternDistribution out;
  for (const auto& [k, c] : counts) {
    Rational q(BigInt(static_cast<unsigned long>(c)), BigInt(static_cast<unsigned long>(total)));
    q.canonicalize();
    out[k] = q;
  }
  return out;
}

namespace {

std::vector<std::uint32_t> type_to_pattern(const CycleType& t) {
  std::vector<std::uint32_t> v(t.parts);
  std::sort(v.begin(), v.end());
  return v;
}

PatternDistribution group_pattern_distribution(const PermGroup& g, std::uint64_t cap) {
  PatternDistribution out;
  for (const auto& [t, q] : cycle_type_distribution(g, cap)) out[type_to_pattern(t)] += q;
  return out;
}

} // namespace

PatternDistribution tower_pattern_distribution(const WreathTower& t, std::uint64_t cap) {
  return group_pattern_distribution(tower_group(t), cap);
}

Rational pattern_total_variation(const PatternDistribution& a, const PatternDistribution& b) {
  Rational tv(0);
  std::set<std::vector<std::uint32_t>> keys;
  for (const auto& [k, _] : a) keys.insert(k);
  for (const auto& [k, _] : b) keys.insert(k);
  for (const auto& k : keys) {
    Rational pa = a.count(k) ? a.at(k) : Rational(0);
    Rational pb = b.count(k) ? b.at(k) : Rational(0);
    tv += abs(pa - pb);
  }
  return tv / 2;
}

Rational compare_to_tower(const PatternDistribution& dist, const WreathTower& t) {
  return pattern_total_variation(dist, tower_pattern_distribution(t));
}

namespace {

// all subgroups of a small group, as sorted element vectors
std::vector<std::vector<Perm>> all_subgroups_of(const PermGroup& g, std::uint64_t cap) {
  std::vector<Perm> elems = g.elements(cap);
  std::sort(elems.begin(), elems.end());
  auto closure = [&](std::vector<Perm> seed) {
    std::set<Perm> have(seed.begin(), seed.end());
    have.insert(Perm::identity(g.degree()));
    std::vector<Perm> frontier(have.begin(), have.end());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& x : frontier)
        for (const auto& y : have) {
          for (const Perm& c : {compose(x, y), compose(y, x)}) {
            if (!have.count(c)) next.push_back(c);
          }
        }
      for (auto& c : next) have.insert(c);
      frontier = std::move(next);
    }
    return std::vector<Perm>(have.begin(), have.end());
  };
  std::set<std::vector<Perm>> groups;
  groups.insert(closure({}));
  for (const auto& e : elems) groups.insert(closure({e}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Perm>> snapshot(groups.begin(), groups.end());
    for (const auto& h : snapshot) {
      if (h.size() == elems.size()) continue;
      for (const auto& e : elems) {
        std::vector<Perm> seed = h;
        seed.push_back(e);
        if (groups.insert(closure(std::move(seed))).second) grew = true;
      }
    }
  }
  return {groups.begin(), groups.end()};
}

} // namespace

SubgroupFit best_fitting_transitive_subgroup(const PatternDistribution& dist,
                                             const WreathTower& t) {
  PermGroup full = tower_group(t);
  if (full.order() > 512)
    throw OrderCapError("subgroup sweep supported for tower order <= 512");
  std::optional<SubgroupFit> best;
  for (const auto& elems : all_subgroups_of(full, 512)) {
    PermGroup h(full.degree(), elems);
    if (!h.is_transitive()) continue;
    PatternDistribution hd;
    std::map<std::vector<std::uint32_t>, std::uint64_t> counts;
    for (const auto& e : elems) ++counts[type_to_pattern(cycle_type(e))];
    for (const auto& [k, c] : counts) {
      Rational q(BigInt(static_cast<unsigned long>(c)),
                 BigInt(static_cast<unsigned long>(elems.size())));
      q.canonicalize();
      hd[k] = q;
    }
    Rational tv = pattern_total_variation(dist, hd);
    if (!best || tv < best->tv) {
      SubgroupFit fit;
      fit.order = h.order();
      fit.tv = tv;
      fit.dist = hd;
      std::string desc = "<";
      // a small generating set: strip redundant elements greedily
      std::vector<Perm> gens;
      for (const auto& e : elems) {
        if (e.is_identity()) continue;
        PermGroup sofar(full.degree(), gens);
        if (!sofar.contains(e)) gens.push_back(e);
        if (PermGroup(full.degree(), gens).order() == BigInt((unsigned long)elems.size())) break;
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) desc += ", ";
        desc += gens[i].to_cycle_string();
      }
      desc += ">";
      fit.description = desc;
      best = std::move(fit);
    }
  }
  if (!best) throw InvalidArgumentError("no transitive subgroup found");
  return *best;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("f")) {
    if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
  }
  Rational a = parse_rational(j.at("a").is_string() ? j.at("a").get<std::string>()
                                                    : std::to_string(j.at("a").get<std::int64_t>()));
  Rational a0 = parse_rational(j.at("a0").is_string()
                                   ? j.at("a0").get<std::string>()
                                   : std::to_string(j.at("a0").get<std::int64_t>()));
  ExperimentConfig cfg(DynamicalSystem(std::move(coeffs), a, a0));
  cfg.mode = j.at("mode").get<std::string>();
  if (cfg.mode != "hits" && cfg.mode != "stability" && cfg.mode != "frobenius")
    throw ParseError("unknown scan mode: " + cfg.mode);
  cfg.c_bound = j.value("C", 1U);
  cfg.n_max = j.value("n_max", 1U);
  cfg.frob_n = j.value("n", 1U);
  cfg.from = j.at("primes").at("from").get<std::uint64_t>();
  cfg.to = j.at("primes").at("to").get<std::uint64_t>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j{{"f", nlohmann::json::array()},
                   {"a", rational_str(system.a)},
                   {"a0", rational_str(system.a0)},
                   {"mode", mode},
                   {"primes", {{"from", from}, {"to", to}}}};
  for (const auto& c : system.f) j["f"].push_back(c.get_str());
  if (mode == "stability") {
    j["C"] = c_bound;
    j["n_max"] = n_max;
  }
  if (mode == "frobenius") j["n"] = frob_n;
  if (seed) j["seed"] = *seed;
  return j;
}

ScanReport run_experiment(const ExperimentConfig& cfg, unsigned jobs) {
  ScanReport rep;
  if (cfg.mode == "hits")
    rep = hits_scan(cfg.system, cfg.from, cfg.to, jobs);
  else if (cfg.mode == "stability")
    rep = c_stability_scan(cfg.system, cfg.c_bound, cfg.n_max, cfg.from, cfg.to, jobs);
  else
    rep = frobenius_statistics(cfg.system, cfg.frob_n, cfg.from, cfg.to, jobs);
  rep.parameters = cfg.to_json();
  return rep;
}

} // namespace arborlab
