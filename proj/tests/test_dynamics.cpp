#include <doctest.h>

#include "arborlab/dynamics.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/primes.hpp"
#include "arborlab/rng.hpp"

using namespace arborlab;

namespace {

DynamicalSystem sylvester() {
  return DynamicalSystem({BigInt(1), BigInt(-1), BigInt(1)}, Rational(0), Rational(2));
}

DynamicalSystem squares(Rational a, Rational a0) {
  return DynamicalSystem({BigInt(0), BigInt(0), BigInt(1)}, a, a0);
}

} // namespace

TEST_CASE("exact orbits") {
  auto orb = orbit(sylvester(), 4);
  REQUIRE(orb.size() == 5);
  CHECK(orb[0] == 2);
  CHECK(orb[1] == 3);
  CHECK(orb[2] == 7);
  CHECK(orb[3] == 43);
  CHECK(orb[4] == 1807);
  // the recurrence a_{n+1} = 1 + a_0 ... a_n in disguise
  CHECK(orb[3] == Rational(1) + orb[0] * orb[1] * orb[2]);

  auto pow = orbit(squares(Rational(-1), Rational(2)), 3);
  CHECK(pow[3] == 256);

  CHECK(orbit(sylvester(), 0).size() == 1);

  CHECK_THROWS_AS(orbit(sylvester(), 100, 512), GrowthCapError);
  try {
    orbit(sylvester(), 100, 512);
  } catch (const GrowthCapError& e) {
    CHECK(e.step() > 0);
  }
}

TEST_CASE("orbit hits mod p") {
  HitResult h5 = orbit_hits_mod_p(squares(Rational(-1), Rational(2)), 5);
  CHECK(h5.outcome == HitOutcome::Hit);
  CHECK(h5.n == 1); // 2^2 = 4 = -1 mod 5

  HitResult h7 = orbit_hits_mod_p(squares(Rational(-1), Rational(2)), 7);
  CHECK(h7.outcome == HitOutcome::NoHit);

  HitResult skip = orbit_hits_mod_p(squares(Rational(-1), Rational(1, 7)), 7);
  CHECK(skip.outcome == HitOutcome::Skipped);

  CHECK_THROWS_AS(orbit_hits_mod_p(sylvester(), 8), InvalidArgumentError);
}

TEST_CASE("orbits commute with reduction mod p") {
  Rng rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t deg = 2 + rng.next_below(3);
    std::vector<BigInt> coeffs;
    for (std::uint32_t i = 0; i <= deg; ++i)
      coeffs.push_back(BigInt((long)rng.next_below(19)) - 9);
    if (coeffs.back() == 0) coeffs.back() = 1;
    long a0 = (long)rng.next_below(50);
    DynamicalSystem sys(coeffs, Rational(1), Rational(a0));
    std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11, 13}[rng.next_below(4)];
    auto fp = sys.reduce(p);
    if (!fp) continue;
    auto orb = orbit(sys, 5, 200000);
    std::uint64_t x = a0 % p;
    for (std::size_t k = 1; k < orb.size(); ++k) {
      x = fp->evaluate(x);
      BigInt reduced = orb[k].get_num() % (unsigned long)p;
      if (reduced < 0) reduced += (unsigned long)p;
      CHECK(reduced.get_ui() == x);
    }
  }
}

TEST_CASE("stability scan records") {
  ScanReport rep = c_stability_scan(sylvester(), 1, 1, 5, 13);
  REQUIRE(rep.records.size() == 4); // 5, 7, 11, 13
  for (const auto& r : rep.records) CHECK(is_prime_u64(r.p));
  // p = 5: x^2 - x + 1 has nonresidue discriminant -> one factor
  CHECK(rep.records[0].p == 5);
  CHECK(rep.records[0].factor_counts == std::vector<std::uint32_t>{1});
  CHECK(rep.records[0].matches);
  // p = 13: discriminant -3 = 10 is a square (6^2 = 36 = 10), two factors
  CHECK(rep.records[3].p == 13);
  CHECK(rep.records[3].factor_counts == std::vector<std::uint32_t>{2});
  CHECK(!rep.records[3].matches);
  CHECK(rep.records[3].c_stable_up_to == 0);
}

TEST_CASE("density") {
  ScanReport rep;
  rep.mode = "hits";
  for (int i = 0; i < 10; ++i) {
    PrimeRecord r;
    r.p = 100 + i;
    r.outcome = i < 3 ? "hit" : "no-hit";
    r.matches = i < 3;
    rep.records.push_back(r);
  }
  Density d = density(rep);
  CHECK(d.value == Rational(3, 10));

  for (auto& r : rep.records) r.matches = false;
  CHECK(density(rep).value == 0);

  for (auto& r : rep.records) r.skipped = true;
  CHECK_THROWS_AS(density(rep), InvalidArgumentError);
  CHECK_THROWS_AS(density(ScanReport{}), InvalidArgumentError);
}

TEST_CASE("report merge equals combined scan") {
  DynamicalSystem sys = squares(Rational(-1), Rational(2));
  ScanReport whole = hits_scan(sys, 2, 500);
  ScanReport left = hits_scan(sys, 2, 250);
  ScanReport right = hits_scan(sys, 251, 500);
  ScanReport merged = merge_reports(left, right);
  CHECK(merged.to_json().dump() == whole.to_json().dump());
  CHECK(merged.to_csv() == whole.to_csv());
  CHECK_THROWS_AS(merge_reports(left, whole), InvalidArgumentError); // overlap
  // merge is order-insensitive
  CHECK(merge_reports(right, left).to_json().dump() == whole.to_json().dump());
}

TEST_CASE("scan json round trip and csv shape") {
  ScanReport rep = hits_scan(squares(Rational(-1), Rational(2)), 2, 100);
  ScanReport back = ScanReport::from_json(rep.to_json());
  CHECK(back.to_json().dump() == rep.to_json().dump());
  std::string csv = rep.to_csv();
  CHECK(csv.rfind("p,outcome,detail\n", 0) == 0);
}

TEST_CASE("frobenius statistics") {
  DynamicalSystem sys({BigInt(1), BigInt(-1), BigInt(1)}, Rational(5), Rational(0));
  ScanReport rep = frobenius_statistics(sys, 1, 2, 2000);
  auto counts = rep.pattern_counts();
  CHECK(counts.count({1, 1}) == 1);
  CHECK(counts.count({2}) == 1);

  // n = 0: the degenerate pattern {1}
  ScanReport deg = frobenius_statistics(sys, 0, 2, 100);
  auto dcounts = deg.pattern_counts();
  REQUIRE(dcounts.size() == 1);
  CHECK(dcounts.begin()->first == std::vector<std::uint32_t>{1});

  // a synthetic distribution exactly matching the tower has TV zero
  PatternDistribution exact = tower_pattern_distribution(WreathTower::parse("S2^2"));
  CHECK(compare_to_tower(exact, WreathTower::parse("S2^2")) == 0);

  CHECK_THROWS_AS(frobenius_statistics(sys, 7, 2, 100), OrderCapError); // 2^7 = 128 > 64
}

TEST_CASE("best fitting transitive subgroup") {
  // the Klein four group inside S2 wr S2 has cycle types 1^4 and 2^2 only
  PatternDistribution klein;
  klein[{1, 1, 1, 1}] = Rational(1, 4);
  klein[{2, 2}] = Rational(3, 4);
  SubgroupFit fit = best_fitting_transitive_subgroup(klein, WreathTower::parse("S2^2"));
  CHECK(fit.order == 4);
  CHECK(fit.tv == 0);
}

TEST_CASE("experiment config round trip") {
  nlohmann::json j{{"f", {1, -1, 1}}, {"a", "0"}, {"a0", "2"}, {"mode", "hits"},
                   {"primes", {{"from", 2}, {"to", 50}}}};
  ExperimentConfig cfg = ExperimentConfig::from_json(j);
  CHECK(cfg.system.degree() == 2);
  CHECK(cfg.mode == "hits");
  ScanReport rep = run_experiment(cfg);
  CHECK(rep.mode == "hits");
  CHECK(rep.parameters.at("mode") == "hits");

  nlohmann::json bad = j;
  bad["mode"] = "nonsense";
  CHECK_THROWS_AS(ExperimentConfig::from_json(bad), ParseError);
}

TEST_CASE("sharded scans agree with single-threaded") {
  DynamicalSystem sys = squares(Rational(-1), Rational(2));
  ScanReport one = hits_scan(sys, 2, 3000, 1);
  ScanReport four = hits_scan(sys, 2, 3000, 4);
  CHECK(one.to_json().dump() == four.to_json().dump());
}
