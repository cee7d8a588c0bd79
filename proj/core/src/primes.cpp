#include "arborlab/primes.hpp"

#include <algorithm>
#include <cmath>

#include "arborlab/errors.hpp"

namespace arborlab {

std::vector<std::uint64_t> primes_in_range(std::uint64_t from, std::uint64_t to) {
  std::vector<std::uint64_t> out;
  if (to < 2 || to < from) return out;
  from = std::max<std::uint64_t>(from, 2);

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(to))) + 1;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> small_primes;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    small_primes.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> sieve(kSegment);
  for (std::uint64_t low = from; low <= to; low += kSegment) {
    std::uint64_t high = std::min(low + kSegment - 1, to);
    std::fill(sieve.begin(), sieve.end(), 1);
    for (std::uint64_t p : small_primes) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) sieve[j - low] = 0;
    }
    for (std::uint64_t n = low; n <= high; ++n)
      if (sieve[n - low] && n >= 2) out.push_back(n);
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto mul = [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powm = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t acc = 1;
    a %= n;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    if (a >= n) continue;
    std::uint64_t x = powm(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mul(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

} // namespace arborlab
