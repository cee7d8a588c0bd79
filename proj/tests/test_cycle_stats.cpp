#include <doctest.h>

#include "arborlab/catalog.hpp"
#include "arborlab/cycle_stats.hpp"
#include "arborlab/errors.hpp"
#include "support/brute.hpp"

using namespace arborlab;

namespace {

// brute fixed-point-free proportions per coset, by naive closure
std::pair<Rational, Rational> brute_sym_coset_fpf(std::uint32_t n) {
  auto elems = test::naive_elements(n, PermGroup::symmetric(n).generators());
  std::uint64_t even_total = 0, odd_total = 0, even_fpf = 0, odd_fpf = 0;
  for (const auto& p : elems) {
    bool fpf = p.fixed_point_count() == 0;
    if (p.is_even()) {
      ++even_total;
      even_fpf += fpf;
    } else {
      ++odd_total;
      odd_fpf += fpf;
    }
  }
  Rational e(BigInt((unsigned long)even_fpf), BigInt((unsigned long)even_total));
  Rational o(BigInt((unsigned long)odd_fpf), BigInt((unsigned long)odd_total));
  e.canonicalize();
  o.canonicalize();
  return {e, o};
}

} // namespace

TEST_CASE("olds formula values") {
  OldsValues n5 = olds_coset_formula(5);
  CHECK(n5.alternating_coset == Rational(2, 5));
  CHECK(n5.odd_coset == Rational(1, 3));
  OldsValues n4 = olds_coset_formula(4);
  CHECK(n4.alternating_coset == Rational(1, 4));
  CHECK(n4.odd_coset == Rational(1, 2));
  OldsValues n2 = olds_coset_formula(2);
  CHECK(n2.alternating_coset == 0);
  CHECK(n2.odd_coset == 1);
  CHECK_THROWS_AS(olds_coset_formula(1), InvalidArgumentError);
}

TEST_CASE("olds formula equals exhaustive counts") {
  for (std::uint32_t n = 2; n <= 7; ++n) {
    auto [even_prop, odd_prop] = brute_sym_coset_fpf(n);
    OldsValues v = olds_coset_formula(n);
    CHECK(v.alternating_coset == even_prop);
    CHECK(v.odd_coset == odd_prop);
  }
}

TEST_CASE("coset fpf tables") {
  CosetFpfTable s5 = coset_fpf_table(PermGroup::symmetric(5), PermGroup::alternating(5));
  REQUIRE(s5.rows.size() == 2);
  CHECK(s5.rows[0].fpf == Rational(2, 5));
  CHECK(s5.rows[1].fpf == Rational(1, 3));
  CHECK(s5.alpha == Rational(1, 3));

  CosetFpfTable a5 = coset_fpf_table(PermGroup::alternating(5), PermGroup::alternating(5));
  REQUIRE(a5.rows.size() == 1);
  CHECK(a5.rows[0].fpf == Rational(2, 5));

  // generic traversal path: a conjugated copy of C6 with its C3
  PermGroup c6 = PermGroup::cyclic(Perm::parse(6, "(0 1 2 3 4 5)"));
  PermGroup c3 = PermGroup::cyclic(Perm::parse(6, "(0 2 4)(1 3 5)"));
  CosetFpfTable t6 = coset_fpf_table(c6, c3);
  REQUIRE(t6.rows.size() == 2);
  // C3 coset: identity has fixed points, the two rotations do not -> 2/3
  CHECK(t6.rows[0].fpf == Rational(2, 3));
  // other coset: three fixed-point-free odd rotations -> 1
  CHECK(t6.rows[1].fpf == 1);
  CHECK(t6.alpha == Rational(2, 3));

  // non-normal subgroup rejected
  CHECK_THROWS_AS(coset_fpf_table(PermGroup::symmetric(4),
                                  PermGroup::cyclic(Perm::parse(4, "(0 1)"))),
                  InvalidArgumentError);
}

TEST_CASE("PGammaL2(9) attains alpha = 1/4") {
  Catalog cat = Catalog::load_default();
  const CatalogEntry* e = cat.find("PGammaL2_9");
  REQUIRE(e != nullptr);
  CosetFpfTable t = coset_fpf_table(e->group(), *e->socle());
  REQUIRE(t.rows.size() == 4);
  CHECK(t.alpha == Rational(1, 4));
  // json emission carries the schema fields
  auto j = t.to_json();
  CHECK(j.contains("table"));
  CHECK(j.at("alpha")[0] == "1");
  CHECK(j.at("alpha")[1] == "4");
}

TEST_CASE("fixed point distributions") {
  Distribution d1 = fixed_point_distribution(WreathTower::parse("S2"));
  CHECK(d1.at(0) == Rational(1, 2));
  CHECK(d1.at(2) == Rational(1, 2));

  Distribution d2 = fixed_point_distribution(WreathTower::parse("S2^2"));
  CHECK(d2.at(0) == Rational(5, 8));
  CHECK(d2.at(2) == Rational(1, 4));
  CHECK(d2.at(4) == Rational(1, 8));
  CHECK(d2.total() == 1);
  CHECK(d2.mean() == 1);

  // [A5]: the full table matches the exhaustive count over 60 elements
  Distribution a5 = fixed_point_distribution(WreathTower({WreathTower::alt(5)}));
  auto elems = test::naive_elements(5, PermGroup::alternating(5).generators());
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& p : elems) ++counts[p.fixed_point_count()];
  for (const auto& [k, c] : counts) {
    Rational expect(BigInt((unsigned long)c), BigInt((unsigned long)elems.size()));
    expect.canonicalize();
    CHECK(a5.at(k) == expect);
  }
  CHECK(a5.at(0) == Rational(2, 5));

  // exact mode rejects Custom levels and big degrees
  WreathTower custom({WreathTower::custom(4, {Perm::parse(4, "(0 1 2 3)")}, "c4")});
  CHECK_THROWS_AS(fixed_point_distribution(custom), InvalidArgumentError);
  CHECK_THROWS_AS(fixed_point_distribution(WreathTower::parse("S13")), OrderCapError);
}

TEST_CASE("full cycle proportions") {
  CHECK(full_cycle_proportion(WreathTower::parse("S2")).value == Rational(1, 2));
  CHECK(full_cycle_proportion(WreathTower::parse("S2^2")).value == Rational(1, 4));

  // [S3]^2 against exhaustive enumeration of the order-1296 group
  FullCycleResult s3s3 = full_cycle_proportion(WreathTower::parse("S3^2"));
  REQUIRE(s3s3.exact);
  PermGroup g = tower_group(WreathTower::parse("S3^2"));
  std::uint64_t full = 0, total = 0;
  g.for_each_element([&](const Perm& p) {
    total += 1;
    full += p.cycle_count() == 1;
    return true;
  });
  Rational expect(BigInt((unsigned long)full), BigInt((unsigned long)total));
  expect.canonicalize();
  CHECK(s3s3.value == expect);
  CHECK(s3s3.value <= Rational(2, 3) * Rational(1, 3));

  // Alt levels of even degree admit no full cycles
  CHECK(full_cycle_proportion(WreathTower::parse("A4^2")).value == 0);

  // Monte Carlo path reports its sampling metadata
  WreathTower custom({WreathTower::custom(4, {Perm::parse(4, "(0 1 2 3)")}, "c4")});
  FullCycleResult mc = full_cycle_proportion(custom, 20000, 9);
  CHECK(!mc.exact);
  CHECK(mc.samples == 20000);
  CHECK(mc.seed == 9);
  CHECK(mc.estimate > 0.45); // C4 has two 4-cycles among its four elements
  CHECK(mc.estimate < 0.55);
}

TEST_CASE("cycle count distributions") {
  CycleCountResult d1 = cycle_count_distribution(WreathTower::parse("S2"), StatMode::Exact);
  CHECK(d1.dist.at(1) == Rational(1, 2));
  CHECK(d1.dist.at(2) == Rational(1, 2));

  CycleCountResult d2 = cycle_count_distribution(WreathTower::parse("S2^2"), StatMode::Exact);
  CHECK(d2.dist.at(1) == Rational(1, 4));
  CHECK(d2.dist.at(2) == Rational(3, 8));
  CHECK(d2.dist.at(3) == Rational(1, 4));
  CHECK(d2.dist.at(4) == Rational(1, 8));

  // Monte Carlo on [S3]^2 within TV 0.005 of exact, at one million draws
  CycleCountResult exact = cycle_count_distribution(WreathTower::parse("S3^2"), StatMode::Exact);
  CycleCountResult mc =
      cycle_count_distribution(WreathTower::parse("S3^2"), StatMode::MonteCarlo, 1'000'000, 31);
  CHECK(total_variation(exact.dist, mc.dist) <= Rational(1, 200));
  CHECK(mc.samples == 1'000'000);
}

TEST_CASE("few cycles bound") {
  FewCyclesBound b = few_cycles_bound(10, 1, Rational(1, 2));
  CHECK(b.sum == Rational(1, 1024));
  CHECK(b.bound == Rational(5, 256));
  CHECK(b.sum <= b.bound);
  CHECK(!b.degenerate);

  FewCyclesBound c = few_cycles_bound(20, 2, Rational(3, 4));
  CHECK(c.sum <= c.bound);

  FewCyclesBound d = few_cycles_bound(7, 7, Rational(1, 2));
  CHECK(d.degenerate);

  CHECK_THROWS_AS(few_cycles_bound(5, 0, Rational(1, 2)), InvalidArgumentError);
  CHECK_THROWS_AS(few_cycles_bound(5, 6, Rational(1, 2)), InvalidArgumentError);
  CHECK_THROWS_AS(few_cycles_bound(5, 2, Rational(3, 2)), InvalidArgumentError);
}

TEST_CASE("cycle type distribution by enumeration") {
  auto dist = cycle_type_distribution(PermGroup::symmetric(4));
  CHECK(dist[CycleType({1, 1, 1, 1})] == Rational(1, 24));
  CHECK(dist[CycleType({2, 1, 1})] == Rational(1, 4));
  CHECK(dist[CycleType({4})] == Rational(1, 4));
}
