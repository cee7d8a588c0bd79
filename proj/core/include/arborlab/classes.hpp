#pragma once

#include <functional>
#include <vector>

#include "arborlab/numbers.hpp"
#include "arborlab/perm.hpp"
#include "arborlab/rng.hpp"

namespace arborlab {

/// All partitions of n, as cycle types (parts descending).
std::vector<CycleType> partitions_of(std::uint32_t n);

/// Size of the S_n conjugacy class with the given cycle type:
/// n! / prod_k (k^{m_k} m_k!).
BigInt class_size(const CycleType& type);

/// Visits every permutation of the given cycle type exactly once.
/// Stops early when the visitor returns false. Intended for small degrees.
void for_each_of_cycle_type(const CycleType& type,
                            const std::function<bool(const Perm&)>& visit);

/// Exactly uniform over the S_d conjugacy class of the given type:
/// a uniform arrangement of the points cut into cycles of the given lengths.
Perm uniform_of_cycle_type(const CycleType& type, Rng& rng);

/// Uniform over S_d (Fisher-Yates) and over A_d (parity-fixed).
Perm uniform_symmetric(std::uint32_t degree, Rng& rng);
Perm uniform_alternating(std::uint32_t degree, Rng& rng);

} // namespace arborlab
