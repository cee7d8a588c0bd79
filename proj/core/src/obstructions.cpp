#include "arborlab/obstructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "arborlab/errors.hpp"

namespace arborlab {

namespace {

// Restriction of g to the (setwise fixed) points of a block, as a
// permutation of {0..|block|-1} with the block sorted ascending.
Perm restrict_to_block(const Perm& g, const std::vector<std::uint32_t>& block) {
  std::vector<std::uint32_t> pos(g.degree(), UINT32_MAX);
  for (std::uint32_t i = 0; i < block.size(); ++i) pos[block[i]] = i;
  std::vector<std::uint32_t> im(block.size());
  for (std::uint32_t i = 0; i < block.size(); ++i) {
    std::uint32_t y = g(block[i]);
    if (y >= g.degree() || pos[y] == UINT32_MAX)
      throw InvalidArgumentError("element does not fix the block setwise");
    im[i] = pos[y];
  }
  return Perm(std::move(im));
}

} // namespace

bool is_large_kernel(const PermGroup& g, const BlockSystem& b, std::uint32_t socle_degree) {
  if (socle_degree < 3) throw InvalidArgumentError("socle degree must be at least 3");
  if (b.block_size() != socle_degree)
    throw InvalidArgumentError("block size does not match socle degree");
  for (const auto& blk : b.blocks) {
    for (std::uint32_t i = 0; i + 2 < blk.size(); ++i) {
      Perm three_cycle = Perm::cycle(g.degree(), {blk[i], blk[i + 1], blk[i + 2]});
      if (!g.contains(three_cycle)) return false;
    }
  }
  return true;
}

bool is_invariant_decomposition(const PermGroup& g, const BlockSystem& b) {
  if (g.degree() > 10'000) throw OrderCapError("invariance test capped at degree 10^4");
  if (!b.is_invariant_under(g.generators()))
    throw InvalidArgumentError("partition is not invariant under the group");
  const auto& base_block = b.blocks[b.block_of[0]];
  for (const auto& other : all_block_systems(g)) {
    const auto& other_block = other.blocks[other.block_of[0]];
    std::size_t common = 0;
    for (auto p : base_block)
      if (other.block_of[p] == other.block_of[0]) ++common;
    (void)other_block;
    if (common <= 1) return false;
  }
  return true;
}

CycleType s6_class_twist(const CycleType& t) {
  static const std::array<std::pair<CycleType, CycleType>, 3> swaps = {{
      {CycleType({2, 1, 1, 1, 1}), CycleType({2, 2, 2})},
      {CycleType({3, 1, 1, 1}), CycleType({3, 3})},
      {CycleType({6}), CycleType({3, 2, 1})},
  }};
  for (const auto& [a, bb] : swaps) {
    if (t == a) return bb;
    if (t == bb) return a;
  }
  return t;
}

bool is_diagonal_element(const std::vector<Perm>& components) {
  if (components.empty()) throw InvalidArgumentError("empty component list");
  const std::uint32_t d = components.front().degree();
  for (const auto& c : components)
    if (c.degree() != d) throw DegreeMismatchError("diagonal test needs equal degrees");
  auto canon = [&](const CycleType& t) {
    if (d != 6) return t;
    CycleType tw = s6_class_twist(t);
    return std::min(t, tw);
  };
  CycleType first = canon(cycle_type(components.front()));
  for (std::size_t i = 1; i < components.size(); ++i)
    if (canon(cycle_type(components[i])) != first) return false;
  return true;
}

bool is_diagonal_subgroup(const PermGroup& k, const BlockSystem& b) {
  for (const auto& g : k.generators())
    for (const auto& blk : b.blocks) {
      if (b.block_of[g(blk[0])] != b.block_of[blk[0]])
        throw InvalidArgumentError("subgroup moves a block of the partition");
      restrict_to_block(g, blk); // validates setwise fixing
    }
  for (const auto& blk : b.blocks) {
    PermGroup stab = k.pointwise_stabilizer(blk);
    if (!stab.is_trivial()) return false;
  }
  return true;
}

BlockSystem socle_partition(const PermGroup& g, const BlockSystem& b,
                            std::uint32_t socle_degree) {
  if (socle_degree < 5) throw InvalidArgumentError("socle_partition needs Alt(d) with d >= 5");
  if (b.block_size() != socle_degree)
    throw InvalidArgumentError("block size does not match socle degree");
  const std::size_t m = b.block_count();
  if (m > 30) throw OrderCapError("socle_partition capped at 30 blocks");

  PermGroup kernel = block_kernel(g, b);
  if (kernel.is_trivial()) throw InvalidArgumentError("trivial block kernel");

  // N = kernel restricted to per-block even parts: the kernel of the
  // per-block sign vector map into C2^m
  auto sign_vector = [&](const Perm& p) {
    std::uint32_t v = 0;
    for (std::size_t bi = 0; bi < m; ++bi)
      if (!restrict_to_block(p, b.blocks[bi]).is_even()) v |= (1u << bi);
    return v;
  };

  // pivot-indexed F2 basis of the sign image, with a witness perm per
  // basis vector whose sign equals the stored mask
  std::vector<std::uint32_t> pivot_mask(m, 0);
  std::vector<Perm> pivot_perm(m, Perm::identity(g.degree()));
  auto reduce = [&](std::uint32_t v, Perm p) -> std::pair<std::uint32_t, Perm> {
    for (std::size_t bit = 0; bit < m; ++bit) {
      if (!(v & (1u << bit))) continue;
      if (pivot_mask[bit]) {
        v ^= pivot_mask[bit];
        p = compose(pivot_perm[bit].inverse(), p);
      }
    }
    return {v, std::move(p)};
  };
  std::size_t rank = 0;
  for (const auto& k : kernel.generators()) {
    auto [v, p] = reduce(sign_vector(k), k);
    if (v != 0) {
      std::size_t bit = 0;
      while (!(v & (1u << bit))) ++bit;
      pivot_mask[bit] = v;
      pivot_perm[bit] = std::move(p);
      ++rank;
    }
  }
  if (rank > 12) throw OrderCapError("sign image too large in socle_partition");

  // transversal of the image: products of basis witnesses
  std::vector<std::size_t> pivots;
  for (std::size_t bit = 0; bit < m; ++bit)
    if (pivot_mask[bit]) pivots.push_back(bit);
  const std::size_t image_size = std::size_t{1} << rank;
  std::vector<Perm> transversal;
  std::vector<std::uint32_t> image_elems;
  std::map<std::uint32_t, std::size_t> image_index;
  transversal.reserve(image_size);
  for (std::size_t s = 0; s < image_size; ++s) {
    Perm t = Perm::identity(g.degree());
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < rank; ++i)
      if (s & (std::size_t{1} << i)) {
        t = compose(t, pivot_perm[pivots[i]]);
        v ^= pivot_mask[pivots[i]];
      }
    image_index[v] = s;
    transversal.push_back(std::move(t));
    image_elems.push_back(v);
  }

  // Schreier generators of N = ker(sign)
  std::set<Perm> n_gen_set;
  for (const auto& k : kernel.generators()) {
    std::uint32_t vk = sign_vector(k);
    for (std::size_t s = 0; s < image_size; ++s) {
      auto it = image_index.find(image_elems[s] ^ vk);
      if (it == image_index.end())
        throw InvalidArgumentError("sign image closure failure");
      Perm candidate = compose(transversal[it->second].inverse(), compose(k, transversal[s]));
      if (!candidate.is_identity()) n_gen_set.insert(std::move(candidate));
    }
  }
  PermGroup n_group(g.degree(), {n_gen_set.begin(), n_gen_set.end()});

  const BigInt simple_order = factorial(socle_degree) / 2;
  BigInt rest = n_group.order();
  std::size_t power = 0;
  while (rest > 1 && rest % simple_order == 0) {
    rest /= simple_order;
    ++power;
  }
  if (rest != 1 || power == 0)
    throw InvalidArgumentError("socle intersection order " + n_group.order().get_str() +
                               " is not a positive power of |Alt(" +
                               std::to_string(socle_degree) + ")|");

  // pairwise projections decide the partition
  std::vector<std::uint32_t> class_of(m);
  std::iota(class_of.begin(), class_of.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (class_of[x] != x) x = class_of[x] = class_of[class_of[x]];
    return x;
  };
  const BigInt simple_sq = simple_order * simple_order;
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j) {
      std::vector<std::uint32_t> pts(b.blocks[i]);
      pts.insert(pts.end(), b.blocks[j].begin(), b.blocks[j].end());
      BigInt proj = n_group.order() / n_group.pointwise_stabilizer(pts).order();
      if (proj == simple_order) {
        class_of[find(i)] = find(j);
      } else if (proj != simple_sq) {
        throw InvalidArgumentError("pairwise projection order " + proj.get_str() +
                                   " is neither |L| nor |L|^2");
      }
    }
  std::vector<std::uint32_t> flat(m);
  for (std::uint32_t i = 0; i < m; ++i) flat[i] = find(i);
  BlockSystem parts = BlockSystem::from_classes(flat);
  if (parts.block_count() != power)
    throw InvalidArgumentError("socle partition inconsistent with intersection order");
  return parts;
}

bool partitions_compatible(const PermGroup& g, const BlockSystem& p, const BlockSystem& q) {
  if (p.degree() != g.degree() || q.degree() != g.degree())
    throw DegreeMismatchError("partition degree mismatch");
  if (!p.is_invariant_under(g.generators()) || !q.is_invariant_under(g.generators()))
    throw InvalidArgumentError("partitions must be invariant under the group");
  std::vector<std::vector<std::uint32_t>> images;
  for (const auto& blk : p.blocks) {
    std::vector<std::uint32_t> img;
    for (auto pt : blk) img.push_back(q.block_of[pt]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    images.push_back(std::move(img));
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) continue;
      std::vector<std::uint32_t> inter;
      std::set_intersection(images[i].begin(), images[i].end(), images[j].begin(),
                            images[j].end(), std::back_inserter(inter));
      if (!inter.empty()) return false;
    }
  return true;
}

bool LevelProfile::all_large() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const LevelReport& r) { return r.largeness == Largeness::Large; });
}

bool LevelProfile::all_galois_proper() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const LevelReport& r) { return r.galois_proper; });
}

namespace {

// Partition of fine-block indices induced by a coarser system.
BlockSystem induced_on_blocks(const BlockSystem& fine, const BlockSystem& coarse) {
  std::vector<std::uint32_t> class_of(fine.block_count());
  for (std::size_t fb = 0; fb < fine.block_count(); ++fb) {
    std::uint32_t target = coarse.block_of[fine.blocks[fb][0]];
    for (auto p : fine.blocks[fb])
      if (coarse.block_of[p] != target)
        throw InvalidArgumentError("systems are not nested");
    class_of[fb] = target;
  }
  return BlockSystem::from_classes(class_of);
}

} // namespace

LevelProfile largeness_profile(const PermGroup& g, const std::vector<BlockSystem>& systems,
                               const std::vector<std::uint32_t>& socle_degrees) {
  if (systems.empty()) throw InvalidArgumentError("largeness_profile needs at least one system");
  if (socle_degrees.size() != systems.size())
    throw InvalidArgumentError("one socle degree per nested system expected");
  for (std::size_t i = 0; i + 1 < systems.size(); ++i)
    induced_on_blocks(systems[i + 1], systems[i]); // throws unless nested

  LevelProfile profile;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    // action on the finer side of this level: the points themselves for the
    // innermost level, otherwise the blocks of the next system down
    PermGroup acting = (i + 1 < systems.size()) ? block_action(g, systems[i + 1]) : g;
    BlockSystem level_blocks =
        (i + 1 < systems.size()) ? induced_on_blocks(systems[i + 1], systems[i]) : systems[i];
    LevelReport rep;
    rep.level = i + 1;
    PermGroup kernel = block_kernel(acting, level_blocks);
    rep.kernel_order = kernel.order();
    rep.galois_proper = rep.kernel_order > 1;
    std::uint32_t d = socle_degrees[i];
    if (level_blocks.block_size() != d)
      throw InvalidArgumentError("socle degree does not match block size at level " +
                                 std::to_string(i + 1));
    if (d < 5) {
      rep.largeness = Largeness::NotApplicable;
      rep.note = "abelian or solvable per-block socle; largeness predicate not applicable";
    } else {
      rep.largeness =
          is_large_kernel(acting, level_blocks, d) ? Largeness::Large : Largeness::NotLarge;
    }
    profile.levels.push_back(std::move(rep));
  }
  return profile;
}

ConjugationCounterexample build_conjugation_counterexample(std::uint32_t n) {
  if (n < 5) throw InvalidArgumentError("counterexample needs n >= 5");
  // two-element subsets of {0,1,2}, each with its sorted point pair
  const std::array<std::array<std::uint32_t, 2>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  const std::uint32_t block = n * n;
  const std::uint32_t degree = 3 * block;

  auto point = [&](std::uint32_t j, std::uint32_t xa, std::uint32_t xb) {
    return j * block + xa * n + xb;
  };

  std::vector<Perm> gens;
  std::vector<Perm> flag_gens;
  // flag f = 2*j + (0 if the flag's copy index is pairs[j][0] else 1)
  auto flag = [&](std::uint32_t copy, std::uint32_t j) -> std::uint32_t {
    return 2 * j + (pairs[j][0] == copy ? 0u : 1u);
  };

  // copies of Alt(n), acting on the coordinate they own in each block
  const std::vector<Perm> alt_gens = PermGroup::alternating(n).generators();
  for (std::uint32_t copy = 0; copy < 3; ++copy) {
    for (const auto& a : alt_gens) {
      std::vector<std::uint32_t> im(degree);
      std::iota(im.begin(), im.end(), 0u);
      for (std::uint32_t j = 0; j < 3; ++j) {
        if (pairs[j][0] != copy && pairs[j][1] != copy) continue;
        bool first_slot = pairs[j][0] == copy;
        for (std::uint32_t xa = 0; xa < n; ++xa)
          for (std::uint32_t xb = 0; xb < n; ++xb)
            im[point(j, xa, xb)] =
                first_slot ? point(j, a(xa), xb) : point(j, xa, a(xb));
      }
      gens.push_back(Perm(std::move(im)));
      flag_gens.push_back(Perm::identity(6));
    }
  }

  // top Sym(3) permuting the three copies
  const std::vector<Perm> sym3_gens = PermGroup::symmetric(3).generators();
  for (const auto& s : sym3_gens) {
    std::vector<std::uint32_t> im(degree);
    std::vector<std::uint32_t> fim(6);
    auto pair_index = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
      if (a > b) std::swap(a, b);
      for (std::uint32_t j = 0; j < 3; ++j)
        if (pairs[j][0] == a && pairs[j][1] == b) return j;
      throw InvalidArgumentError("unreachable pair");
    };
    for (std::uint32_t j = 0; j < 3; ++j) {
      std::uint32_t a = pairs[j][0], b = pairs[j][1];
      std::uint32_t ja = s(a), jb = s(b);
      std::uint32_t j2 = pair_index(ja, jb);
      bool keep_order = (ja < jb);
      for (std::uint32_t xa = 0; xa < n; ++xa)
        for (std::uint32_t xb = 0; xb < n; ++xb)
          im[point(j, xa, xb)] = keep_order ? point(j2, xa, xb) : point(j2, xb, xa);
      fim[flag(a, j)] = flag(ja, j2);
      fim[flag(b, j)] = flag(jb, j2);
    }
    gens.push_back(Perm(std::move(im)));
    flag_gens.push_back(Perm(std::move(fim)));
  }

  ConjugationCounterexample out{
      PermGroup(degree, gens),
      BlockSystem(),
      PermGroup(6, flag_gens),
      BlockSystem(),
      BlockSystem(),
  };
  std::vector<std::uint32_t> class_of(degree);
  for (std::uint32_t p = 0; p < degree; ++p) class_of[p] = p / block;
  out.product_blocks = BlockSystem::from_classes(class_of);

  std::vector<std::uint32_t> by_copy(6), by_block(6);
  for (std::uint32_t j = 0; j < 3; ++j) {
    by_copy[flag(pairs[j][0], j)] = pairs[j][0];
    by_copy[flag(pairs[j][1], j)] = pairs[j][1];
    by_block[2 * j] = j;
    by_block[2 * j + 1] = j;
  }
  out.flag_p = BlockSystem::from_classes(by_copy);
  out.flag_pj = BlockSystem::from_classes(by_block);
  return out;
}

} // namespace arborlab
