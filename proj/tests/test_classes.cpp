#include <doctest.h>

#include <set>

#include "arborlab/classes.hpp"

using namespace arborlab;

TEST_CASE("partition counts") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(12).size() == 77);
}

TEST_CASE("class sizes sum to the group order") {
  for (std::uint32_t n : {4u, 5u, 6u, 7u}) {
    BigInt total = 0;
    for (const auto& t : partitions_of(n)) total += class_size(t);
    CHECK(total == factorial(n));
  }
  CHECK(class_size(CycleType({5})) == 24);      // 5-cycles in S5
  CHECK(class_size(CycleType({2, 2, 1})) == 15); // double transpositions in S5
}

TEST_CASE("class enumeration visits each element exactly once") {
  for (std::uint32_t n : {4u, 5u, 6u}) {
    for (const auto& t : partitions_of(n)) {
      std::set<Perm> seen;
      for_each_of_cycle_type(t, [&](const Perm& p) {
        CHECK(cycle_type(p) == t);
        CHECK(seen.insert(p).second);
        return true;
      });
      CHECK(BigInt((unsigned long)seen.size()) == class_size(t));
    }
  }
}

TEST_CASE("uniform class element has the right type") {
  Rng rng(7);
  CycleType t({3, 2, 2, 1});
  for (int i = 0; i < 200; ++i) CHECK(cycle_type(uniform_of_cycle_type(t, rng)) == t);
}

TEST_CASE("uniform alternating is even") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) CHECK(uniform_alternating(6, rng).is_even());
}
