#include <doctest.h>

#include "arborlab/classes.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/perm.hpp"
#include "arborlab/rng.hpp"

using namespace arborlab;

TEST_CASE("compose applies the right factor first") {
  Perm p = Perm::parse(3, "(0 1 2)");
  CHECK(compose(p, Perm::identity(3)) == p);

  // (0 1 2)(3 4) after (2 3): the 5-cycle 0->1, 1->2, 2->4, 3->0, 4->3
  Perm a = Perm::parse(5, "(0 1 2)(3 4)");
  Perm b = Perm::parse(5, "(2 3)");
  Perm c = compose(a, b);
  CHECK(c == Perm(std::vector<std::uint32_t>{1, 2, 4, 0, 3}));
  // exhaustive point-by-point against the definition
  for (std::uint32_t x = 0; x < 5; ++x) CHECK(c(x) == a(b(x)));
  CHECK(cycle_type(c) == CycleType({5}));

  Perm t = Perm::parse(2, "(0 1)");
  CHECK(compose(t, t).is_identity());

  CHECK_THROWS_AS(compose(Perm::identity(3), Perm::identity(4)), DegreeMismatchError);
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(Perm::identity(5)) == CycleType({1, 1, 1, 1, 1}));
  CHECK(cycle_type(Perm::parse(5, "(0 1 2)(3 4)")) == CycleType({3, 2}));
  CHECK(cycle_type(Perm::parse(6, "(0 1 2 3)")) == CycleType({4, 1, 1}));
  CHECK(cycle_type(Perm::identity(5)).degree() == 5);
  CHECK(CycleType({3, 2}).cycle_count() == 2);
  CHECK(CycleType::parse("[3,2,1]") == CycleType({1, 2, 3}));
  CHECK(CycleType({4, 2, 1}).to_string() == "[4,2,1]");
}

TEST_CASE("parity and inverse") {
  CHECK(Perm::parse(5, "(0 1 2)").is_even());
  CHECK(!Perm::parse(5, "(0 1)").is_even());
  CHECK(!Perm::parse(6, "(0 1 2 3)").is_even());
  Perm p = Perm::parse(7, "(0 3 5)(1 2)(4 6)");
  CHECK(compose(p, p.inverse()).is_identity());
}

TEST_CASE("cycle string round trip") {
  for (const char* s : {"(0 1 2)(3 4)", "(0 4)(1 3)", "(1 2 3 4 5)", "()"}) {
    Perm p = Perm::parse(6, s);
    CHECK(Perm::parse(6, p.to_cycle_string()) == p);
  }
  CHECK(Perm::identity(4).to_cycle_string() == "()");
  CHECK_THROWS_AS(Perm::parse(3, "(0 5)"), ParseError);
  CHECK_THROWS_AS(Perm::parse(3, "(0 1"), ParseError);
  CHECK_THROWS_AS(Perm::parse(3, ""), ParseError);
  CHECK_THROWS_AS(Perm::parse(4, "(0 1)(1 2)"), ParseError);
}

TEST_CASE("conjugation preserves cycle type") {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint32_t d = 3 + rng.next_below(9);
    Perm p = uniform_symmetric(d, rng);
    Perm q = uniform_symmetric(d, rng);
    CHECK(cycle_type(conjugate(p, q)) == cycle_type(q));
  }
}

TEST_CASE("image table validation") {
  CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 0, 1}), InvalidArgumentError);
  CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 3}), InvalidArgumentError);
}
