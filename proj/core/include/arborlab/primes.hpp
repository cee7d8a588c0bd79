#pragma once

#include <cstdint>
#include <vector>

namespace arborlab {

/// Primes in [from, to], segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t from, std::uint64_t to);

bool is_prime_u64(std::uint64_t n);

} // namespace arborlab
