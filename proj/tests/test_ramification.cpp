#include <doctest.h>

#include "arborlab/classes.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/ramification.hpp"
#include "support/brute.hpp"

using namespace arborlab;

TEST_CASE("riemann-hurwitz genus") {
  CHECK(rh_genus(0, RamificationType::parse("[2],[2]")) == 0);
  CHECK(rh_genus(0, RamificationType::parse("[3],[2,1],[2,1]")) == 0);
  CHECK(rh_genus(0, RamificationType::parse("[5],[3,1,1],[2,2,1]")) == 0);
  // an elliptic ramification type
  CHECK(rh_genus(0, RamificationType::parse("[2],[2],[2],[2]")) == 1);
  CHECK_THROWS_AS(rh_genus(0, RamificationType::parse("[4],[2,1,1]")), InvalidArgumentError);
  CHECK_THROWS_AS(RamificationType::parse("[5],[3,1]"), InvalidArgumentError);
}

TEST_CASE("polynomial ramification types") {
  CHECK(is_polynomial_type(RamificationType::parse("[5],[3,1,1],[2,2,1]")));
  CHECK(is_polynomial_type(RamificationType::parse("[2],[2]")));
  CHECK(!is_polynomial_type(RamificationType::parse("[4],[2,1,1]")));
  CHECK(is_polynomial_type(RamificationType::parse("[2,1],[2,1],[3]"))); // the [d] entry may sit anywhere
  CHECK(!is_polynomial_type(RamificationType::parse("[3],[3],[3]")));     // totally ramified but genus 1
}

TEST_CASE("shabat chaining") {
  Perm sigma = Perm::parse(5, "(0 1 2)(3 4)");
  Perm tau = shabat_tau(sigma);
  CHECK(tau == Perm::parse(5, "(2 3)"));
  CHECK(cycle_type(compose(sigma, tau)) == CycleType({5}));

  Perm dcycle = Perm::parse(6, "(0 1 2 3 4 5)");
  CHECK(shabat_tau(dcycle).is_identity());

  Perm with_fixed = Perm::parse(5, "(0 1)(2 3)");
  Perm tau2 = shabat_tau(with_fixed);
  CHECK(tau2 == Perm::parse(5, "(1 2)(3 4)"));
  Perm prod = compose(with_fixed, tau2);
  CHECK(cycle_type(prod) == CycleType({5}));
  CHECK(prod == Perm::parse(5, "(0 1 3 4 2)"));

  // random sweep: product is a full cycle, the triple is a polynomial type,
  // and the genus-0 identity (d-1) + (d-r) + (r-1) = 2d-2 holds
  Rng rng(606);
  for (std::uint32_t d = 5; d <= 12; ++d) {
    for (int i = 0; i < 300; ++i) {
      Perm s = uniform_symmetric(d, rng);
      Perm t = shabat_tau(s);
      Perm st = compose(s, t);
      REQUIRE(st.cycle_count() == 1);
      RamificationType rt(d, {CycleType({d}), cycle_type(s), cycle_type(t)});
      CHECK(is_polynomial_type(rt));
      std::size_t r = s.cycle_count();
      CHECK((d - 1) + (d - r) + (r - 1) == 2 * d - 2);
      // tau is a product of r-1 transpositions: contribution r-1
      long contrib = 0;
      for (auto e : cycle_type(t).parts) contrib += e - 1;
      CHECK(contrib == (long)(r - 1));
    }
  }
}

TEST_CASE("belyi family parameter checks") {
  BelyiFamilyReport r1 = belyi_family_check(5, 3, 2, 1);
  CHECK(!r1.admissible); // t = 1 fails
  CHECK(is_polynomial_type(RamificationType::parse("[5],[3,1,1],[2,2,1]")));

  BelyiFamilyReport r2 = belyi_family_check(7, 3, 2, 3);
  CHECK(r2.admissible);
  CHECK(*r2.q == 2);

  BelyiFamilyReport r3 = belyi_family_check(5, 3, 3, 2);
  CHECK(!r3.admissible); // q = 1, r != q+1

  CHECK_THROWS_AS(belyi_family_check(0, 1, 1, 1), InvalidArgumentError);
}

TEST_CASE("triple primitivity oracle") {
  TripleOracleVerdict v = triple_primitivity_oracle(7, 3, 2, 3);
  CHECK(v.all_primitive);
  CHECK(v.exhaustive);
  CHECK(v.triples_checked == 14700); // 70 choices of y times 210 of z

  TripleOracleVerdict v5 = triple_primitivity_oracle(5, 2, 1, 4);
  CHECK(v5.all_primitive);

  TripleOracleVerdict sampled = triple_primitivity_oracle(12, 2, 5, 7, SampledMode{1000, 5});
  CHECK(sampled.all_primitive);
  CHECK(sampled.triples_checked == 1000);

  CHECK_THROWS_AS(triple_primitivity_oracle(5, 3, 3, 2), InvalidArgumentError);
  CHECK_THROWS_AS(triple_primitivity_oracle(12, 2, 5, 7), OrderCapError); // exhaustive beyond 7
}

TEST_CASE("oracle agrees with brute-force primitivity at small degree") {
  // d = 5, r = 2, s = 1, t = 4: sweep all triples both ways
  {
    const std::uint32_t d = 5;
    std::vector<std::uint32_t> all{0, 1, 2, 3, 4};
    Perm x = Perm::cycle(d, all);
    std::uint64_t checked = 0;
    for_each_of_cycle_type(CycleType({2, 1, 1, 1}), [&](const Perm& y) {
      for_each_of_cycle_type(CycleType({4, 1}), [&](const Perm& z) {
        PermGroup g(d, {x, y, z});
        CHECK(is_primitive(g) == test::brute_primitive(d, {x, y, z}));
        ++checked;
        return true;
      });
      return true;
    });
    CHECK(checked == 10 * 30);
  }
  // d = 6, r = 2, s = 1, t = 5: a sample of the sweep against the same oracle
  {
    const std::uint32_t d = 6;
    std::vector<std::uint32_t> all{0, 1, 2, 3, 4, 5};
    Perm x = Perm::cycle(d, all);
    Rng rng(1212);
    for (int i = 0; i < 150; ++i) {
      Perm y = uniform_of_cycle_type(CycleType({2, 1, 1, 1, 1}), rng);
      Perm z = uniform_of_cycle_type(CycleType({5, 1}), rng);
      CHECK(is_primitive(PermGroup(d, {x, y, z})) == test::brute_primitive(d, {x, y, z}));
    }
  }
}

TEST_CASE("invariable generation") {
  PermGroup s5 = PermGroup::symmetric(5);
  PermGroup a5 = PermGroup::alternating(5);
  PermGroup five = PermGroup::cyclic(Perm::parse(5, "(0 1 2 3 4)"));
  PermGroup three = PermGroup::cyclic(Perm::parse(5, "(0 1 2)"));
  CHECK(invariably_generates(s5, a5, {five, three}));

  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup a4 = PermGroup::alternating(4);
  PermGroup four = PermGroup::cyclic(Perm::parse(4, "(0 1 2 3)"));
  PermGroup dbl = PermGroup::cyclic(Perm::parse(4, "(0 1)(2 3)"));
  CHECK(!invariably_generates(s4, a4, {four, dbl}));

  // a single subgroup equal to the group itself
  CHECK(invariably_generates(s4, a4, {s4}));

  // monotone: enlarging a subgroup in a true instance keeps it true
  PermGroup bigger(5, {Perm::parse(5, "(0 1 2)"), Perm::parse(5, "(0 1)(3 4)")});
  CHECK(invariably_generates(s5, a5, {five, bigger}));

  CHECK_THROWS_AS(invariably_generates(s5, a5, {}), InvalidArgumentError);
}

TEST_CASE("meets_at valuation predicate") {
  CHECK(meets_at(RationalPoint::of(Rational(5)), RationalPoint::of(Rational(2)), 3) == 1);
  CHECK(meets_at(RationalPoint::of(Rational(1, 3)), RationalPoint::of(Rational(2, 3)), 3) == 1);
  CHECK(meets_at(RationalPoint::of(Rational(7, 4)), RationalPoint::of(Rational(3, 4)), 2) == 4);
  // no meet
  CHECK(meets_at(RationalPoint::of(Rational(1)), RationalPoint::of(Rational(2)), 5) == 0);
  // mixed charts
  CHECK(meets_at(RationalPoint::of(Rational(1, 3)), RationalPoint::of(Rational(2)), 3) == 0);
  // infinity through the reciprocal chart
  CHECK(meets_at(RationalPoint::infinity(), RationalPoint::of(Rational(1, 9)), 3) == 2);
  CHECK(meets_at(RationalPoint::infinity(), RationalPoint::of(Rational(5)), 3) == 0);
  CHECK(meets_at(RationalPoint::infinity(), RationalPoint::of(Rational(0)), 7) == 0);

  CHECK_THROWS_AS(meets_at(RationalPoint::of(Rational(1)), RationalPoint::of(Rational(2)), 6),
                  InvalidArgumentError);
  CHECK_THROWS_AS(meets_at(RationalPoint::of(Rational(1)), RationalPoint::of(Rational(1)), 5),
                  InvalidArgumentError);

  // symmetry over random pairs
  Rng rng(77);
  const std::vector<BigInt> primes = {BigInt(2), BigInt(3), BigInt(5), BigInt(7), BigInt(13)};
  for (int i = 0; i < 400; ++i) {
    long num1 = (long)rng.next_below(2000) - 1000;
    long num2 = (long)rng.next_below(2000) - 1000;
    long den1 = 1 + (long)rng.next_below(60);
    long den2 = 1 + (long)rng.next_below(60);
    Rational a(num1, den1), b(num2, den2);
    a.canonicalize();
    b.canonicalize();
    if (a == b) continue;
    const BigInt& p = primes[rng.next_below(primes.size())];
    CHECK(meets_at(RationalPoint::of(a), RationalPoint::of(b), p) ==
          meets_at(RationalPoint::of(b), RationalPoint::of(a), p));
  }
}
