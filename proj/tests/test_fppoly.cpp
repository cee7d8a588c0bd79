#include <doctest.h>

#include "arborlab/errors.hpp"
#include "arborlab/fppoly.hpp"
#include "arborlab/primes.hpp"
#include "arborlab/rng.hpp"
#include "arborlab/verify.hpp"

using namespace arborlab;

TEST_CASE("factor counts at the worked examples") {
  // x^4+1 mod 3 splits into two irreducible quadratics
  FpPoly x41(3, {1, 0, 0, 0, 1});
  CHECK(factor_count_mod_p(x41) == 2);
  // and indeed (x^2+x+2)(x^2+2x+2) = x^4+1 mod 3
  FpPoly f1(3, {2, 1, 1});
  FpPoly f2(3, {2, 2, 1});
  CHECK(mul(f1, f2) == x41);

  // x^2+1 mod 5 has the two roots +-2
  CHECK(factor_count_mod_p(FpPoly(5, {1, 0, 1})) == 2);

  // x^4+1 mod 2 = (x+1)^4: one distinct factor
  CHECK(factor_count_mod_p(FpPoly(2, {1, 0, 0, 0, 1})) == 1);

  CHECK_THROWS_AS(factor_count_mod_p(FpPoly::zero(7)), InvalidArgumentError);
}

TEST_CASE("radical extraction") {
  // (x+1)^4 mod 2 -> x+1
  CHECK(radical(FpPoly(2, {1, 0, 0, 0, 1})) == FpPoly(2, {1, 1}));
  // x^2 (x+1)^3 mod 3 -> x(x+1)
  FpPoly f = mul(mul(FpPoly(3, {0, 1}), FpPoly(3, {0, 1})),
                 mul(mul(FpPoly(3, {1, 1}), FpPoly(3, {1, 1})), FpPoly(3, {1, 1})));
  CHECK(radical(f) == FpPoly(3, {0, 1, 1}));
  // squarefree input is unchanged (made monic)
  FpPoly g(5, {1, 2, 1, 3});
  CHECK(radical(g) == g.monic());
}

TEST_CASE("factor degree multisets") {
  CHECK(factor_degree_multiset(FpPoly(3, {1, 0, 0, 0, 1})) ==
        std::vector<std::uint32_t>{2, 2});
  CHECK(factor_degree_multiset(FpPoly(5, {1, 0, 1})) == std::vector<std::uint32_t>{1, 1});
  CHECK(factor_degree_multiset(FpPoly(2, {1, 0, 0, 0, 1})) == std::vector<std::uint32_t>{1});
  // x^3 + x + 1 mod 5 has no roots, hence is irreducible
  CHECK(factor_degree_multiset(FpPoly(5, {1, 1, 0, 1})) == std::vector<std::uint32_t>{3});
}

TEST_CASE("division and gcd invariants") {
  Rng rng(314);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 13}[rng.next_below(5)];
    auto random_poly = [&](std::uint32_t maxdeg) {
      std::vector<std::uint64_t> c(1 + rng.next_below(maxdeg + 1));
      for (auto& x : c) x = rng.next_below(p);
      return FpPoly(p, c);
    };
    FpPoly a = random_poly(10), b = random_poly(6);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(add(mul(q, b), r) == a);
    CHECK(r.degree() < b.degree());
    FpPoly d = gcd(a, b);
    if (!a.is_zero() && !d.is_zero()) {
      CHECK(mod(a, d).is_zero());
      CHECK(mod(b, d).is_zero());
    }
  }
}

TEST_CASE("berlekamp count equals the independent factorization oracle") {
  Rng rng(2718);
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 13};
  for (int trial = 0; trial < 150; ++trial) {
    std::uint64_t p = primes[rng.next_below(primes.size())];
    std::uint32_t deg = 1 + rng.next_below(12);
    std::vector<std::uint64_t> coeffs(deg + 1);
    for (auto& c : coeffs) c = rng.next_below(p);
    if (coeffs[deg] == 0) coeffs[deg] = 1;
    CHECK(factor_count_mod_p(FpPoly(p, coeffs)) == independent_factor_count(p, coeffs));
  }
}

TEST_CASE("prime sieve") {
  CHECK(primes_in_range(2, 100).size() == 25);
  CHECK(primes_in_range(90, 110) == std::vector<std::uint64_t>{97, 101, 103, 107, 109});
  CHECK(primes_in_range(2, 1'000'000).size() == 78498);
  CHECK(primes_in_range(10, 4).empty());
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(999983));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(999981));
  CHECK(is_prime_u64(2147483647ULL));
}
