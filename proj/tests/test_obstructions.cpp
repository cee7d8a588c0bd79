#include <doctest.h>

#include "arborlab/classes.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/obstructions.hpp"
#include "arborlab/verify.hpp"
#include "arborlab/wreath.hpp"

using namespace arborlab;

namespace {

BlockSystem five_blocks(std::uint32_t blocks) {
  std::vector<std::uint32_t> class_of(blocks * 5);
  for (std::uint32_t p = 0; p < blocks * 5; ++p) class_of[p] = p / 5;
  return BlockSystem::from_classes(class_of);
}

} // namespace

TEST_CASE("large kernel detection") {
  auto cases = obstruction_test_set();
  for (const auto& c : cases) {
    BlockSystem b = five_blocks(c.group.degree() / 5);
    CHECK_MESSAGE(is_large_kernel(c.group, b, 5) == c.expect_large, c.name);
  }
  // block size mismatch
  PermGroup g = tower_group(WreathTower::parse("A5*A5"));
  CHECK_THROWS_AS(is_large_kernel(g, five_blocks(5), 6), InvalidArgumentError);
}

TEST_CASE("socle partitions") {
  for (const auto& c : obstruction_test_set()) {
    if (c.expect_parts == 0) continue;
    BlockSystem b = five_blocks(c.group.degree() / 5);
    BlockSystem parts = socle_partition(c.group, b, 5);
    CHECK_MESSAGE(parts.block_count() == c.expect_parts, c.name);
    // the partition is invariant under the induced action on blocks
    PermGroup on_blocks = block_action(c.group, b);
    CHECK(parts.is_invariant_under(on_blocks.generators()));
    // singletons exactly when the kernel is large
    CHECK((parts.block_count() == b.block_count()) == c.expect_large);
    // the mixed three-block case splits as {{0},{1,2}}
    if (c.name == "A5-x-diag-top-swap")
      CHECK(parts == BlockSystem::from_blocks(3, {{0}, {1, 2}}));
  }
  // abelian block groups: |N| is not a power of |A_5|
  auto cases = obstruction_test_set();
  const auto& c5 = cases.back();
  REQUIRE(c5.name == "C5-wr-S2");
  CHECK_THROWS_AS(socle_partition(c5.group, five_blocks(2), 5), InvalidArgumentError);
}

TEST_CASE("diagonal subgroups and the element consequence") {
  BlockSystem b = five_blocks(2);
  // diagonal copy of A5 in A5 x A5
  std::vector<Perm> diag_gens, prod_gens;
  const std::vector<Perm> a5_gens = PermGroup::alternating(5).generators();
  for (const auto& g : a5_gens) {
    std::vector<std::uint32_t> im(10);
    for (std::uint32_t i = 0; i < 5; ++i) {
      im[i] = g(i);
      im[5 + i] = 5 + g(i);
    }
    diag_gens.push_back(Perm(im));
    std::vector<std::uint32_t> only(10);
    std::iota(only.begin(), only.end(), 0u);
    for (std::uint32_t i = 0; i < 5; ++i) only[i] = g(i);
    prod_gens.push_back(Perm(only));
    std::vector<std::uint32_t> other(10);
    std::iota(other.begin(), other.end(), 0u);
    for (std::uint32_t i = 0; i < 5; ++i) other[5 + i] = 5 + g(i);
    prod_gens.push_back(Perm(other));
  }
  PermGroup diag(10, diag_gens);
  PermGroup prod(10, prod_gens);
  CHECK(is_diagonal_subgroup(diag, b));
  CHECK(!is_diagonal_subgroup(prod, b));
  CHECK(is_diagonal_subgroup(PermGroup::trivial(10), b));

  // every element of a diagonal subgroup is diagonal
  diag.for_each_element([&](const Perm& k) {
    std::vector<Perm> comps;
    for (const auto& blk : b.blocks) {
      std::vector<std::uint32_t> im(5);
      for (std::uint32_t i = 0; i < 5; ++i) im[i] = k(blk[i]) - blk[0];
      comps.push_back(Perm(im));
    }
    CHECK(is_diagonal_element(comps));
    return true;
  });

  // moving a block is rejected
  std::vector<Perm> swap_gens{Perm::parse(10, "(0 5)(1 6)(2 7)(3 8)(4 9)")};
  CHECK_THROWS_AS(is_diagonal_subgroup(PermGroup(10, swap_gens), b), InvalidArgumentError);
}

TEST_CASE("diagonal elements") {
  CHECK_THROWS_AS(is_diagonal_element({}), InvalidArgumentError);
  // different orders: never diagonal
  CHECK(!is_diagonal_element({Perm::parse(5, "(0 1)"), Perm::parse(5, "(0 1 2)")}));
  // same cycle type in degree 4
  CHECK(is_diagonal_element({Perm::parse(4, "(0 1 2)"), Perm::parse(4, "(1 2 3)")}));
  // degree 6: the outer pairing is accepted
  CHECK(is_diagonal_element({Perm::parse(6, "(0 1)"), Perm::parse(6, "(0 1)(2 3)(4 5)")}));
  CHECK(is_diagonal_element({Perm::parse(6, "(0 1 2)"), Perm::parse(6, "(0 1 2)(3 4 5)")}));
  CHECK(is_diagonal_element({Perm::parse(6, "(0 1 2 3 4 5)"), Perm::parse(6, "(0 1)(2 3 4)")}));
  CHECK(!is_diagonal_element({Perm::parse(6, "(0 1)"), Perm::parse(6, "(0 1)(2 3)")}));
  // away from degree 6 the pairing is off
  CHECK(!is_diagonal_element({Perm::parse(7, "(0 1)"), Perm::parse(7, "(0 1)(2 3)(4 5)")}));
}

TEST_CASE("the s6 twist table matches a constructed outer automorphism") {
  // a transitive copy of Sym(5) in Sym(6): PGL2(5) on the projective line
  PermGroup h(6, {Perm::parse(6, "(0 1 2 3 4)"), Perm::parse(6, "(1 2 4 3)"),
                  Perm::parse(6, "(0 5)(1 4)")});
  REQUIRE(h.order() == 120);
  REQUIRE(h.is_transitive());
  PermGroup s6 = PermGroup::symmetric(6);
  // coset space of h in s6
  std::vector<Perm> reps{Perm::identity(6)};
  for (std::size_t i = 0; i < reps.size() && reps.size() < 6; ++i)
    for (const auto& g : s6.generators()) {
      Perm cand = compose(g, reps[i]);
      bool known = false;
      for (const auto& r : reps)
        if (h.contains(compose(r.inverse(), cand))) known = true;
      if (!known) reps.push_back(cand);
    }
  REQUIRE(reps.size() == 6);
  auto phi = [&](const Perm& g) {
    std::vector<std::uint32_t> im(6);
    for (std::uint32_t i = 0; i < 6; ++i) {
      Perm moved = compose(g, reps[i]);
      for (std::uint32_t j = 0; j < 6; ++j)
        if (h.contains(compose(reps[j].inverse(), moved))) {
          im[i] = j;
          break;
        }
    }
    return Perm(im);
  };
  // the induced automorphism realizes exactly the hard-coded class pairing
  for (const auto& t : partitions_of(6)) {
    Perm rep;
    for_each_of_cycle_type(t, [&](const Perm& p) {
      rep = p;
      return false;
    });
    CHECK(cycle_type(phi(rep)) == s6_class_twist(t));
  }
}

TEST_CASE("invariant decompositions") {
  // unique block system: invariance holds
  PermGroup d4 = tower_group(WreathTower::parse("S2^2"));
  CHECK(is_invariant_decomposition(d4, BlockSystem::from_blocks(4, {{0, 1}, {2, 3}})));

  // the 4-blocks-of-2 system of S2 wr S2 wr S2
  WreathTower t8 = WreathTower::parse("S2^3");
  PermGroup g8 = tower_group(t8);
  CHECK(is_invariant_decomposition(g8, t8.natural_systems()[1]));

  // regular Klein four group: competing systems intersect trivially
  PermGroup klein(4, {Perm::parse(4, "(0 1)(2 3)"), Perm::parse(4, "(0 2)(1 3)")});
  CHECK(!is_invariant_decomposition(klein, BlockSystem::from_blocks(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("partition compatibility and the product-action counterexample") {
  ConjugationCounterexample ce = build_conjugation_counterexample(5);
  CHECK(ce.product_group.order() == 1296000);                           // 60^3 * 6
  CHECK(block_kernel(ce.product_group, ce.product_blocks).order() == 216000); // 60^3
  CHECK(ce.flag_group.order() == 6);
  CHECK(ce.flag_group.is_transitive());
  CHECK(!partitions_compatible(ce.flag_group, ce.flag_p, ce.flag_pj));
  // either partition trivial: compatible
  BlockSystem singles = BlockSystem::from_classes({0, 1, 2, 3, 4, 5});
  BlockSystem whole = BlockSystem::from_classes({0, 0, 0, 0, 0, 0});
  CHECK(partitions_compatible(ce.flag_group, singles, ce.flag_pj));
  CHECK(partitions_compatible(ce.flag_group, ce.flag_p, singles));
  CHECK(partitions_compatible(ce.flag_group, whole, ce.flag_pj));
  // both partitions are invariant (the incompatibility is about images, not invariance)
  CHECK(ce.flag_p.is_invariant_under(ce.flag_group.generators()));
  CHECK(ce.flag_pj.is_invariant_under(ce.flag_group.generators()));
}

TEST_CASE("largeness profiles") {
  // full [A5]^2: the single kernel level is large
  WreathTower a5a5 = WreathTower::parse("A5*A5");
  LevelProfile prof = largeness_profile(tower_group(a5a5), a5a5.natural_systems(), {5});
  REQUIRE(prof.levels.size() == 1);
  CHECK(prof.levels[0].largeness == Largeness::Large);
  CHECK(prof.levels[0].galois_proper);
  CHECK(prof.all_large());

  // diagonal construction at the inner level: not large, still Galois-proper
  {
    std::vector<Perm> gens;
    const std::vector<Perm> a5_gens = PermGroup::alternating(5).generators();
    for (const auto& g : a5_gens) {
      std::vector<std::uint32_t> im(25);
      std::iota(im.begin(), im.end(), 0u);
      for (std::uint32_t blk = 0; blk < 5; ++blk)
        for (std::uint32_t i = 0; i < 5; ++i) im[blk * 5 + i] = blk * 5 + g(i);
      gens.push_back(Perm(im)); // diagonal kernel element
      std::vector<std::uint32_t> top(25);
      for (std::uint32_t blk = 0; blk < 5; ++blk)
        for (std::uint32_t i = 0; i < 5; ++i) top[blk * 5 + i] = g(blk) * 5 + i;
      gens.push_back(Perm(top)); // block shuffle
    }
    PermGroup diag_tower(25, gens);
    LevelProfile p2 = largeness_profile(diag_tower, a5a5.natural_systems(), {5});
    REQUIRE(p2.levels.size() == 1);
    CHECK(p2.levels[0].largeness == Largeness::NotLarge);
    CHECK(p2.levels[0].galois_proper);
  }

  // abelian socle: typed not-applicable with proper flags
  WreathTower s2cubed = WreathTower::parse("S2^3");
  LevelProfile p3 = largeness_profile(tower_group(s2cubed), s2cubed.natural_systems(), {2, 2});
  REQUIRE(p3.levels.size() == 2);
  for (const auto& lv : p3.levels) {
    CHECK(lv.largeness == Largeness::NotApplicable);
    CHECK(!lv.note.empty());
    CHECK(lv.galois_proper);
  }
  CHECK(p3.all_galois_proper());
  CHECK(!p3.all_large());

  // non-nested systems are rejected
  BlockSystem bad = BlockSystem::from_blocks(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  CHECK_THROWS_AS(
      largeness_profile(tower_group(s2cubed), {s2cubed.natural_systems()[1], bad}, {2, 2}),
      InvalidArgumentError);
}
