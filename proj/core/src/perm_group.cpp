#include "arborlab/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "arborlab/errors.hpp"

namespace arborlab {

namespace {

std::uint32_t degree_of(const std::vector<Perm>& gens) {
  if (gens.empty())
    throw InvalidArgumentError("empty generator list with unspecified degree");
  return gens.front().degree();
}

} // namespace

// Deterministic Schreier-Sims. Transversals are stored as explicit
// permutations; fine for the degrees this project works at.
struct PermGroup::Chain {
  std::uint32_t degree;
  std::vector<std::uint32_t> base;
  std::vector<Perm> sgens; // strong generators
  struct Level {
    std::vector<std::int32_t> where; // point -> transversal index, -1 outside orbit
    std::vector<Perm> transversal;   // transversal[i] maps base point to orbit[i]
    std::vector<std::uint32_t> orbit;
  };
  std::vector<Level> levels;
  BigInt order;

  Chain(std::uint32_t deg, const std::vector<Perm>& gens,
        const std::vector<std::uint32_t>& preferred)
      : degree(deg) {
    for (auto b : preferred) {
      if (b >= degree) throw InvalidArgumentError("base point out of range");
      push_level(b);
    }
    for (const auto& g : gens) {
      if (g.degree() != degree) throw DegreeMismatchError("generator degree mismatch");
      new_strong_gen(g);
    }
    for (std::size_t l = levels.size(); l-- > 0;) complete_level(l);
    order = 1;
    for (auto& lv : levels) order *= static_cast<unsigned long>(lv.orbit.size());
  }

  void push_level(std::uint32_t b) {
    base.push_back(b);
    Level lv;
    lv.where.assign(degree, -1);
    lv.orbit.push_back(b);
    lv.transversal.push_back(Perm::identity(degree));
    lv.where[b] = 0;
    levels.push_back(std::move(lv));
  }

  std::uint32_t first_moved(const Perm& h) const {
    for (std::uint32_t i = 0; i < degree; ++i)
      if (h(i) != i) return i;
    return degree;
  }

  bool fixes_prefix(const Perm& g, std::size_t k) const {
    for (std::size_t i = 0; i < k; ++i)
      if (g(base[i]) != base[i]) return false;
    return true;
  }

  std::vector<const Perm*> gens_at(std::size_t l) const {
    std::vector<const Perm*> out;
    for (const auto& g : sgens)
      if (fixes_prefix(g, l)) out.push_back(&g);
    return out;
  }

  void recompute_orbit(std::size_t l) {
    auto& lv = levels[l];
    lv.where.assign(degree, -1);
    lv.transversal.clear();
    lv.orbit.clear();
    lv.orbit.push_back(base[l]);
    lv.transversal.push_back(Perm::identity(degree));
    lv.where[base[l]] = 0;
    auto gens = gens_at(l);
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      for (const Perm* g : gens) {
        std::uint32_t y = (*g)(lv.orbit[i]);
        if (lv.where[y] < 0) {
          lv.where[y] = static_cast<std::int32_t>(lv.transversal.size());
          lv.transversal.push_back(compose(*g, lv.transversal[i]));
          lv.orbit.push_back(y);
        }
      }
    }
  }

  // Strips g through levels >= from; returns the stop level and residue.
  std::pair<std::size_t, Perm> strip(std::size_t from, Perm g) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
      std::uint32_t x = g(base[l]);
      if (x == base[l]) continue;
      std::int32_t idx = levels[l].where[x];
      if (idx < 0) return {l, std::move(g)};
      g = compose(levels[l].transversal[idx].inverse(), g);
    }
    return {levels.size(), std::move(g)};
  }

  void new_strong_gen(const Perm& g) {
    auto [j, h] = strip(0, g);
    if (h.is_identity()) return;
    if (j == levels.size()) push_level(first_moved(h));
    sgens.push_back(std::move(h));
  }

  // Makes level l satisfy the strong generation condition, assuming deeper
  // levels already do. Never holds references across sgens/levels growth.
  void complete_level(std::size_t l) {
    recompute_orbit(l);
    for (std::size_t i = 0; i < levels[l].orbit.size(); ++i) {
      // sgens can grow while we iterate; index loop on purpose
      for (std::size_t gi = 0; gi < sgens.size(); ++gi) {
        if (!fixes_prefix(sgens[gi], l)) continue;
        const Perm s = sgens[gi];
        const std::uint32_t x = levels[l].orbit[i];
        const std::int32_t tix = levels[l].where[s(x)];
        Perm schreier =
            compose(levels[l].transversal[tix].inverse(), compose(s, levels[l].transversal[i]));
        auto [j, res] = strip(l + 1, std::move(schreier));
        if (res.is_identity()) continue;
        if (j == levels.size()) push_level(first_moved(res));
        sgens.push_back(std::move(res));
        for (std::size_t m = std::min(j, levels.size() - 1); m > l; --m) complete_level(m);
      }
    }
  }
};

struct PermGroup::ChainBox {
  std::once_flag once;
  std::unique_ptr<Chain> chain;
};

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(std::vector<Perm> generators)
    : PermGroup(degree_of(generators), std::move(generators), {}) {}

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators,
                     std::vector<std::uint32_t> preferred_base)
    : degree_(degree), gens_(std::move(generators)),
      box_(std::make_shared<ChainBox>()), preferred_base_(std::move(preferred_base)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw DegreeMismatchError("generator degree " + std::to_string(g.degree()) +
                                " does not match group degree " + std::to_string(degree_));
  std::erase_if(gens_, [](const Perm& g) { return g.is_identity(); });
}

PermGroup PermGroup::trivial(std::uint32_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::uint32_t degree) {
  if (degree < 2) return trivial(degree);
  std::vector<Perm> gens;
  gens.push_back(Perm::transposition(degree, 0, 1));
  if (degree > 2) {
    std::vector<std::uint32_t> all(degree);
    std::iota(all.begin(), all.end(), 0u);
    gens.push_back(Perm::cycle(degree, all));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::alternating(std::uint32_t degree) {
  if (degree < 3) return trivial(degree);
  std::vector<Perm> gens;
  gens.push_back(Perm::cycle(degree, {0, 1, 2}));
  if (degree > 3) {
    std::vector<std::uint32_t> pts;
    if (degree % 2 == 1) {
      for (std::uint32_t i = 0; i < degree; ++i) pts.push_back(i);
    } else {
      for (std::uint32_t i = 1; i < degree; ++i) pts.push_back(i);
    }
    gens.push_back(Perm::cycle(degree, pts));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(const Perm& p) { return PermGroup(p.degree(), {p}); }

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(box_->once, [this] {
    box_->chain = std::make_unique<Chain>(degree_, gens_, preferred_base_);
  });
  return *box_->chain;
}

const BigInt& PermGroup::order() const { return chain().order; }

bool PermGroup::order_fits_u64() const { return chain().order.fits_ulong_p(); }

std::uint64_t PermGroup::order_u64() const {
  if (!order_fits_u64()) throw OrderCapError("group order exceeds 64 bits");
  return chain().order.get_ui();
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DegreeMismatchError("membership test across degrees");
  auto [l, res] = chain().strip(0, p);
  (void)l;
  return res.is_identity();
}

bool PermGroup::is_trivial() const { return order() == 1; }

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  for (const auto& x : gens_)
    if (!g.contains(x)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const auto& c : g.generators())
    for (const auto& n : gens_)
      if (!contains(conjugate(c, n))) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree_, false);
  for (std::uint32_t s = 0; s < degree_; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> orb{s};
    seen[s] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : gens_) {
        std::uint32_t y = g(orb[i]);
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ == 0 || orbits().size() == 1;
}

void PermGroup::for_each_element(const std::function<bool(const Perm&)>& visit,
                                 std::uint64_t cap) const {
  const Chain& c = chain();
  if (c.order > BigInt(static_cast<unsigned long>(cap)))
    throw OrderCapError("refusing exhaustive enumeration: order " + c.order.get_str() +
                        " exceeds cap " + std::to_string(cap));
  // DFS over transversals; prefix[l] = t_0 ... t_{l-1}
  std::vector<Perm> prefix(c.levels.size() + 1);
  prefix[0] = Perm::identity(degree_);
  std::vector<std::size_t> pos(c.levels.size(), 0);
  if (c.levels.empty()) {
    visit(prefix[0]);
    return;
  }
  std::size_t l = 0;
  for (;;) {
    if (pos[l] == c.levels[l].transversal.size()) {
      if (l == 0) return;
      pos[l] = 0;
      --l;
      ++pos[l];
      continue;
    }
    prefix[l + 1] = compose(prefix[l], c.levels[l].transversal[pos[l]]);
    if (l + 1 == c.levels.size()) {
      if (!visit(prefix[l + 1])) return;
      ++pos[l];
    } else {
      ++l;
    }
  }
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Perm> out;
  for_each_element(
      [&](const Perm& p) {
        out.push_back(p);
        return true;
      },
      cap);
  return out;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const std::uint32_t> points) const {
  std::vector<std::uint32_t> pref(points.begin(), points.end());
  PermGroup rebased(degree_, gens_, pref);
  const Chain& c = rebased.chain();
  std::vector<Perm> stab_gens;
  for (const auto& g : c.sgens) {
    bool fixes = true;
    for (auto p : points)
      if (g(p) != p) {
        fixes = false;
        break;
      }
    if (fixes) stab_gens.push_back(g);
  }
  return PermGroup(degree_, std::move(stab_gens));
}

Perm PermGroup::uniform_element(Rng& rng) const {
  const Chain& c = chain();
  Perm g = Perm::identity(degree_);
  for (const auto& lv : c.levels) {
    std::uint64_t k = rng.next_below(lv.transversal.size());
    g = compose(g, lv.transversal[static_cast<std::size_t>(k)]);
  }
  return g;
}

PermGroup PermGroup::conjugated_by(const Perm& g) const {
  std::vector<Perm> gens;
  gens.reserve(gens_.size());
  for (const auto& x : gens_) gens.push_back(conjugate(g, x));
  return PermGroup(degree_, std::move(gens));
}

} // namespace arborlab
