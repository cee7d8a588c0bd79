#include <doctest.h>

#include <map>

#include "arborlab/errors.hpp"
#include "arborlab/wreath.hpp"

using namespace arborlab;

TEST_CASE("tower orders") {
  WreathTower t22 = WreathTower::parse("S2^2");
  CHECK(t22.leaf_count() == 4);
  CHECK(tower_group(t22).order() == 8);
  CHECK(t22.order() == 8);

  WreathTower s3 = WreathTower::parse("S3");
  CHECK(tower_group(s3).order() == 6);

  WreathTower a5a5 = WreathTower::parse("A5*A5");
  CHECK(a5a5.leaf_count() == 25);
  BigInt expected = 60;
  for (int i = 0; i < 5; ++i) expected *= 60;
  CHECK(a5a5.order() == expected); // 60^6
  CHECK(tower_group(a5a5).order() == expected);

  WreathTower mixed = WreathTower::parse("S3*A4^2");
  CHECK(mixed.depth() == 3);
  CHECK(mixed.leaf_count() == 48);
  CHECK(tower_group(mixed).order() == mixed.order());
}

TEST_CASE("tower parsing and validation") {
  CHECK(WreathTower::parse("A5*S3^2").to_string() == "A5*S3*S3");
  CHECK_THROWS_AS(WreathTower::parse(""), Error);
  CHECK_THROWS_AS(WreathTower::parse("A5**S3"), ParseError);
  CHECK_THROWS_AS(WreathTower::parse("Q5"), ParseError);
  // Alt(2) is trivial and cannot act transitively on its two leaves
  CHECK_THROWS_AS(WreathTower({WreathTower::alt(2)}), InvalidArgumentError);
  // custom levels must be transitive
  CHECK_THROWS_AS(WreathTower({WreathTower::custom(4, {Perm::parse(4, "(0 1)")}, "notrans")}),
                  InvalidArgumentError);
  WreathTower ok({WreathTower::custom(4, {Perm::parse(4, "(0 1 2 3)")}, "c4"),
                  WreathTower::sym(2)});
  CHECK(ok.leaf_count() == 8);
  CHECK(tower_group(ok).order() == 4 * 2 * 2 * 2 * 2);
}

TEST_CASE("natural systems are nested and invariant") {
  WreathTower t = WreathTower::parse("S2*S3*S2");
  PermGroup g = tower_group(t);
  auto systems = t.natural_systems();
  REQUIRE(systems.size() == 2);
  CHECK(systems[0].block_count() == 2);
  CHECK(systems[1].block_count() == 6);
  for (const auto& s : systems) CHECK(s.is_invariant_under(g.generators()));
}

TEST_CASE("uniform tower elements: determinism and membership") {
  WreathTower t = WreathTower::parse("S2*S3");
  PermGroup g = tower_group(t);
  Rng r1(5), r2(5);
  for (int i = 0; i < 40; ++i) {
    Perm a = uniform_element(t, r1);
    Perm b = uniform_element(t, r2);
    CHECK(a == b);
    CHECK(g.contains(a));
  }
}

TEST_CASE("uniform tower elements: frequencies") {
  // depth 1: identity shows up about half of the time
  {
    WreathTower t({WreathTower::sym(2)});
    Rng rng(123);
    int id_count = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
      if (uniform_element(t, rng).is_identity()) ++id_count;
    double freq = double(id_count) / draws;
    CHECK(freq > 0.49);
    CHECK(freq < 0.51);
  }
  // depth 2: all 8 elements near 1/8
  {
    WreathTower t = WreathTower::parse("S2^2");
    Rng rng(456);
    std::map<Perm, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[uniform_element(t, rng)];
    REQUIRE(counts.size() == 8);
    for (const auto& [p, c] : counts) {
      double freq = double(c) / draws;
      CHECK(freq > 0.115);
      CHECK(freq < 0.135);
    }
  }
}

TEST_CASE("uniform tower elements: chi-square at 1e-3") {
  struct Case {
    const char* spec;
    double critical; // chi-square upper quantile at significance 1e-3
  };
  // critical values for df = (order - 1)
  std::vector<Case> cases = {{"S2^2", 24.322}, {"S3", 20.515}};
  for (const auto& c : cases) {
    WreathTower t = WreathTower::parse(c.spec);
    PermGroup g = tower_group(t);
    std::uint64_t order = g.order_u64();
    Rng rng(2024);
    std::map<Perm, std::uint64_t> counts;
    const std::uint64_t draws = 1'000'000;
    for (std::uint64_t i = 0; i < draws; ++i) ++counts[uniform_element(t, rng)];
    REQUIRE(counts.size() == order);
    double expected = double(draws) / double(order);
    double chi2 = 0;
    for (const auto& [p, cnt] : counts) {
      double diff = double(cnt) - expected;
      chi2 += diff * diff / expected;
    }
    CHECK(chi2 < c.critical);
  }
}

TEST_CASE("leaf cap") {
  std::vector<WreathLevel> levels(8, WreathTower::sym(12)); // 12^8 leaves
  WreathTower t(levels);
  CHECK_THROWS_AS(t.leaf_count(), GrowthCapError);
  CHECK_THROWS_AS(tower_group(t), GrowthCapError);
}
