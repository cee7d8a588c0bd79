#pragma once

// Brute-force oracles, deliberately independent of the library's stabilizer
// chain and pair-closure machinery.

#include <set>
#include <vector>

#include "arborlab/block_system.hpp"
#include "arborlab/perm.hpp"

namespace arborlab::test {

// every element of <gens>, by closure under composition
inline std::set<Perm> naive_elements(std::uint32_t degree, const std::vector<Perm>& gens,
                                     std::size_t cap = 2'000'000) {
  std::set<Perm> have{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = compose(g, x);
        if (have.insert(y).second) {
          next.push_back(std::move(y));
          if (have.size() > cap) throw std::runtime_error("naive closure cap exceeded");
        }
      }
    frontier = std::move(next);
  }
  return have;
}

// all partitions of {0..n-1} via restricted growth strings
inline std::vector<std::vector<std::uint32_t>> all_partitions(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> rgs(n, 0);
  auto emit = [&] { out.push_back(rgs); };
  // iterate restricted growth strings
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t i,
                                                              std::uint32_t maxv) {
    if (i == n) {
      emit();
      return;
    }
    for (std::uint32_t v = 0; v <= maxv + 1 && v <= i; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  if (n == 0) return out;
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

// all nontrivial invariant partitions with equal block sizes, by exhaustion
inline std::set<BlockSystem> brute_block_systems(std::uint32_t degree,
                                                 const std::vector<Perm>& gens) {
  std::set<BlockSystem> out;
  for (const auto& rgs : all_partitions(degree)) {
    BlockSystem b = BlockSystem::from_classes(rgs);
    if (b.is_trivial()) continue;
    bool equal_sizes = true;
    for (const auto& blk : b.blocks)
      if (blk.size() != b.block_size()) equal_sizes = false;
    if (!equal_sizes) continue;
    if (b.is_invariant_under(gens)) out.insert(std::move(b));
  }
  return out;
}

// primitivity by exhausting invariant partitions
inline bool brute_primitive(std::uint32_t degree, const std::vector<Perm>& gens) {
  for (const auto& rgs : all_partitions(degree)) {
    BlockSystem b = BlockSystem::from_classes(rgs);
    if (b.is_trivial()) continue;
    if (b.is_invariant_under(gens)) return false;
  }
  return true;
}

} // namespace arborlab::test
