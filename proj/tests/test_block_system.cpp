#include <doctest.h>

#include "arborlab/block_system.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/wreath.hpp"
#include "support/brute.hpp"

using namespace arborlab;

TEST_CASE("minimal block systems of small groups") {
  PermGroup c4 = PermGroup::cyclic(Perm::parse(4, "(0 1 2 3)"));
  auto min_c4 = minimal_block_systems(c4);
  REQUIRE(min_c4.size() == 1);
  CHECK(min_c4[0] == BlockSystem::from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK(!is_primitive(c4));

  PermGroup a5 = PermGroup::alternating(5);
  CHECK(minimal_block_systems(a5).empty());
  CHECK(is_primitive(a5));

  PermGroup d4 = tower_group(WreathTower::parse("S2^2"));
  auto all_d4 = all_block_systems(d4);
  REQUIRE(all_d4.size() == 1);
  CHECK(all_d4[0] == BlockSystem::from_blocks(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("all block systems agree with exhaustive partition search") {
  std::vector<PermGroup> groups = {
      tower_group(WreathTower::parse("S2^2")),
      tower_group(WreathTower::parse("S2^3")),
      tower_group(WreathTower::parse("S3*S2")),
      PermGroup::cyclic(Perm::parse(6, "(0 1 2 3 4 5)")),
      PermGroup::cyclic(Perm::parse(8, "(0 1 2 3 4 5 6 7)")),
      PermGroup(4, {Perm::parse(4, "(0 1)(2 3)"), Perm::parse(4, "(0 2)(1 3)")}),
      PermGroup::symmetric(4),
      PermGroup::alternating(4),
      PermGroup(8, {Perm::parse(8, "(0 1 2 3 4 5 6 7)"), Perm::parse(8, "(1 7)(2 6)(3 5)")}),
  };
  for (const auto& g : groups) {
    auto fast = all_block_systems(g);
    auto oracle = test::brute_block_systems(g.degree(), g.generators());
    CHECK(std::set<BlockSystem>(fast.begin(), fast.end()) == oracle);
    // every minimal system is among them and is invariant
    for (const auto& b : minimal_block_systems(g)) {
      CHECK(oracle.count(b) == 1);
      CHECK(b.is_invariant_under(g.generators()));
    }
  }
}

TEST_CASE("kernel and action multiply to the group order") {
  PermGroup d4 = tower_group(WreathTower::parse("S2^2"));
  BlockSystem b = BlockSystem::from_blocks(4, {{0, 1}, {2, 3}});
  PermGroup kernel = block_kernel(d4, b);
  PermGroup action = block_action(d4, b);
  CHECK(kernel.order() == 4);
  CHECK(action.order() == 2);
  CHECK(kernel.order() * action.order() == d4.order());

  for (const char* spec : {"S2^3", "S3*S2", "A5*S2"}) {
    WreathTower t = WreathTower::parse(spec);
    PermGroup g = tower_group(t);
    for (const auto& sys : t.natural_systems())
      CHECK(block_kernel(g, sys).order() * block_action(g, sys).order() == g.order());
  }
}

TEST_CASE("non-invariant partitions are rejected") {
  PermGroup c4 = PermGroup::cyclic(Perm::parse(4, "(0 1 2 3)"));
  BlockSystem bad = BlockSystem::from_blocks(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(block_action(c4, bad), InvalidArgumentError);
  CHECK_THROWS_AS(block_kernel(c4, bad), InvalidArgumentError);
}

TEST_CASE("intransitive groups are rejected") {
  PermGroup g(5, {Perm::parse(5, "(0 1 2)")});
  CHECK_THROWS_AS(minimal_block_systems(g), InvalidArgumentError);
  CHECK_THROWS_AS(all_block_systems(g), InvalidArgumentError);
  CHECK(!is_primitive(g));
}

TEST_CASE("contains_alternating ground truth") {
  CHECK(contains_alternating(PermGroup::symmetric(5)));
  CHECK(contains_alternating(PermGroup::alternating(6)));
  CHECK(!contains_alternating(PermGroup::cyclic(Perm::parse(5, "(0 1 2 3 4)"))));
  CHECK_THROWS_AS(contains_alternating(PermGroup::symmetric(2)), InvalidArgumentError);

  // curated agreement with the order-divisibility heuristic
  std::vector<PermGroup> curated = {
      PermGroup::symmetric(5),  PermGroup::alternating(6),
      PermGroup::symmetric(7),  PermGroup::cyclic(Perm::parse(5, "(0 1 2 3 4)")),
      PermGroup::alternating(4), tower_group(WreathTower::parse("S2^2")),
  };
  for (const auto& g : curated) {
    BigInt half = factorial(g.degree()) / 2;
    bool heuristic = g.order() % half == 0 && g.is_transitive() && is_primitive(g);
    CHECK(contains_alternating(g) == heuristic);
  }
}
