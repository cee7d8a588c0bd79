#include "arborlab/block_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arborlab/errors.hpp"

namespace arborlab {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns the absorbed root, or UINT32_MAX if already merged.
  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return UINT32_MAX;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return b;
  }
};

} // namespace

BlockSystem BlockSystem::from_classes(const std::vector<std::uint32_t>& class_of) {
  BlockSystem bs;
  const std::uint32_t n = static_cast<std::uint32_t>(class_of.size());
  bs.block_of.assign(n, UINT32_MAX);
  std::vector<std::uint32_t> index_of_class(n, UINT32_MAX);
  for (std::uint32_t p = 0; p < n; ++p) {
    std::uint32_t c = class_of[p];
    if (index_of_class[c] == UINT32_MAX) {
      index_of_class[c] = static_cast<std::uint32_t>(bs.blocks.size());
      bs.blocks.emplace_back();
    }
    bs.block_of[p] = index_of_class[c];
    bs.blocks[index_of_class[c]].push_back(p);
  }
  return bs;
}

BlockSystem BlockSystem::from_blocks(std::uint32_t degree,
                                     std::vector<std::vector<std::uint32_t>> blocks) {
  std::vector<std::uint32_t> class_of(degree, UINT32_MAX);
  for (const auto& blk : blocks) {
    if (blk.empty()) throw InvalidArgumentError("empty block");
    std::uint32_t rep = *std::min_element(blk.begin(), blk.end());
    for (auto p : blk) {
      if (p >= degree || class_of[p] != UINT32_MAX)
        throw InvalidArgumentError("blocks do not partition the point set");
      class_of[p] = rep;
    }
  }
  for (auto c : class_of)
    if (c == UINT32_MAX) throw InvalidArgumentError("blocks do not cover the point set");
  return from_classes(class_of);
}

bool BlockSystem::is_trivial() const {
  return blocks.size() <= 1 || block_size() <= 1;
}

bool BlockSystem::is_invariant_under(const std::vector<Perm>& gens) const {
  for (const auto& g : gens) {
    for (const auto& blk : blocks) {
      std::uint32_t target = block_of[g(blk[0])];
      for (auto p : blk)
        if (block_of[g(p)] != target) return false;
    }
  }
  return true;
}

std::string BlockSystem::to_string() const {
  std::string s = "{";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += ", ";
    s += "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(blocks[b][i]);
    }
    s += "}";
  }
  return s + "}";
}

BlockSystem min_block_system(const std::vector<Perm>& gens, std::uint32_t degree,
                             std::uint32_t alpha, std::uint32_t beta) {
  if (alpha >= degree || beta >= degree || alpha == beta)
    throw InvalidArgumentError("min_block_system: bad point pair");
  UnionFind uf(degree);
  std::vector<std::uint32_t> queue;
  std::uint32_t absorbed = uf.unite(alpha, beta);
  if (absorbed != UINT32_MAX) queue.push_back(absorbed);
  // Atkinson: whenever x got absorbed into find(x), force g(x) ~ g(find(x)).
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t x = queue[qi];
    std::uint32_t r = uf.find(x);
    for (const auto& g : gens) {
      std::uint32_t a = uf.unite(g(x), g(r));
      if (a != UINT32_MAX) queue.push_back(a);
    }
  }
  std::vector<std::uint32_t> class_of(degree);
  for (std::uint32_t p = 0; p < degree; ++p) class_of[p] = uf.find(p);
  return BlockSystem::from_classes(class_of);
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  if (!g.is_transitive()) throw InvalidArgumentError("block systems require a transitive group");
  const std::uint32_t n = g.degree();
  std::set<BlockSystem> candidates;
  for (std::uint32_t beta = 1; beta < n; ++beta) {
    BlockSystem b = min_block_system(g.generators(), n, 0, beta);
    if (!b.is_trivial()) candidates.insert(std::move(b));
  }
  // keep the refinement-minimal ones
  auto refines = [](const BlockSystem& fine, const BlockSystem& coarse) {
    for (const auto& blk : fine.blocks) {
      std::uint32_t target = coarse.block_of[blk[0]];
      for (auto p : blk)
        if (coarse.block_of[p] != target) return false;
    }
    return true;
  };
  std::vector<BlockSystem> out;
  for (const auto& b : candidates) {
    bool minimal = true;
    for (const auto& other : candidates)
      if (other != b && refines(other, b)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(b);
  }
  return out;
}

BlockSystem join(const BlockSystem& a, const BlockSystem& b) {
  if (a.degree() != b.degree()) throw DegreeMismatchError("join of partitions across degrees");
  UnionFind uf(a.degree());
  for (const auto& blk : a.blocks)
    for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  for (const auto& blk : b.blocks)
    for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  std::vector<std::uint32_t> class_of(a.degree());
  for (std::uint32_t p = 0; p < a.degree(); ++p) class_of[p] = uf.find(p);
  return BlockSystem::from_classes(class_of);
}

std::vector<BlockSystem> all_block_systems(const PermGroup& g) {
  if (!g.is_transitive()) throw InvalidArgumentError("block systems require a transitive group");
  const std::uint32_t n = g.degree();
  std::set<BlockSystem> systems;
  for (std::uint32_t beta = 1; beta < n; ++beta) {
    BlockSystem b = min_block_system(g.generators(), n, 0, beta);
    if (!b.is_trivial()) systems.insert(std::move(b));
  }
  // close under join
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<BlockSystem> current(systems.begin(), systems.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        BlockSystem joined = join(current[i], current[j]);
        if (!joined.is_trivial() && systems.insert(joined).second) grew = true;
      }
  }
  return {systems.begin(), systems.end()};
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) return false;
  const std::uint32_t n = g.degree();
  for (std::uint32_t beta = 1; beta < n; ++beta)
    if (!min_block_system(g.generators(), n, 0, beta).is_trivial()) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> block_images(const Perm& g, const BlockSystem& b) {
  std::vector<std::uint32_t> img(b.block_count());
  for (std::size_t bi = 0; bi < b.block_count(); ++bi) {
    std::uint32_t target = b.block_of[g(b.blocks[bi][0])];
    for (auto p : b.blocks[bi])
      if (b.block_of[g(p)] != target)
        throw InvalidArgumentError("partition is not invariant under the group");
    img[bi] = target;
  }
  return img;
}

} // namespace

PermGroup block_action(const PermGroup& g, const BlockSystem& b) {
  if (g.degree() != b.degree()) throw DegreeMismatchError("block_action degree mismatch");
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) gens.push_back(Perm(block_images(x, b)));
  return PermGroup(static_cast<std::uint32_t>(b.block_count()), std::move(gens));
}

PermGroup block_kernel(const PermGroup& g, const BlockSystem& b) {
  if (g.degree() != b.degree()) throw DegreeMismatchError("block_kernel degree mismatch");
  const std::uint32_t n = g.degree();
  const std::uint32_t m = static_cast<std::uint32_t>(b.block_count());
  // combined action on points + block indices; the kernel is the pointwise
  // stabilizer of the block coordinates
  std::vector<Perm> combined;
  for (const auto& x : g.generators()) {
    auto img = block_images(x, b);
    std::vector<std::uint32_t> im(n + m);
    for (std::uint32_t p = 0; p < n; ++p) im[p] = x(p);
    for (std::uint32_t bi = 0; bi < m; ++bi) im[n + bi] = n + img[bi];
    combined.push_back(Perm(std::move(im)));
  }
  PermGroup big(n + m, std::move(combined));
  std::vector<std::uint32_t> block_coords(m);
  std::iota(block_coords.begin(), block_coords.end(), n);
  PermGroup stab = big.pointwise_stabilizer(block_coords);
  std::vector<Perm> kernel_gens;
  for (const auto& x : stab.generators()) {
    std::vector<std::uint32_t> im(x.images().begin(), x.images().begin() + n);
    kernel_gens.push_back(Perm(std::move(im)));
  }
  return PermGroup(n, std::move(kernel_gens));
}

bool contains_alternating(const PermGroup& g) {
  if (g.degree() < 3) throw InvalidArgumentError("contains_alternating needs degree >= 3");
  for (std::uint32_t i = 0; i + 2 < g.degree(); ++i)
    if (!g.contains(Perm::cycle(g.degree(), {i, i + 1, i + 2}))) return false;
  return true;
}

} // namespace arborlab
