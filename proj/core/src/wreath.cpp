#include "arborlab/wreath.hpp"

#include <algorithm>
#include <numeric>

#include "arborlab/classes.hpp"
#include "arborlab/errors.hpp"

namespace arborlab {

namespace {

constexpr std::uint64_t kLeafCap = 1'000'000ULL;

} // namespace

std::vector<Perm> WreathLevel::group_generators() const {
  switch (kind) {
  case LevelKind::Sym:
    return PermGroup::symmetric(degree).generators();
  case LevelKind::Alt:
    return PermGroup::alternating(degree).generators();
  case LevelKind::Custom:
    return custom_gens;
  }
  return {};
}

BigInt WreathLevel::group_order() const {
  switch (kind) {
  case LevelKind::Sym:
    return factorial(degree);
  case LevelKind::Alt:
    return factorial(degree) / 2;
  case LevelKind::Custom:
    return PermGroup(degree, custom_gens).order();
  }
  return 1;
}

std::string WreathLevel::to_string() const {
  switch (kind) {
  case LevelKind::Sym:
    return "S" + std::to_string(degree);
  case LevelKind::Alt:
    return "A" + std::to_string(degree);
  case LevelKind::Custom:
    return "custom:" + custom_name;
  }
  return "?";
}

WreathTower::WreathTower(std::vector<WreathLevel> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw InvalidArgumentError("empty tower");
  for (const auto& lv : levels_) {
    if (lv.degree < 2) throw InvalidArgumentError("tower level degree must be >= 2");
    if (lv.kind == LevelKind::Alt && lv.degree < 3)
      throw InvalidArgumentError("Alt level needs degree >= 3 to act transitively");
    if (lv.kind == LevelKind::Custom) {
      for (const auto& g : lv.custom_gens)
        if (g.degree() != lv.degree)
          throw DegreeMismatchError("custom level generator degree mismatch");
      if (!PermGroup(lv.degree, lv.custom_gens).is_transitive())
        throw InvalidArgumentError("custom tower level must act transitively");
    }
  }
}

WreathLevel WreathTower::alt(std::uint32_t d) { return WreathLevel{d, LevelKind::Alt, {}, {}}; }
WreathLevel WreathTower::sym(std::uint32_t d) { return WreathLevel{d, LevelKind::Sym, {}, {}}; }
WreathLevel WreathTower::custom(std::uint32_t d, std::vector<Perm> gens, std::string name) {
  return WreathLevel{d, LevelKind::Custom, std::move(gens), std::move(name)};
}

WreathTower WreathTower::parse(const std::string& spec) {
  std::vector<WreathLevel> levels;
  std::size_t i = 0;
  while (i < spec.size()) {
    std::size_t star = spec.find('*', i);
    std::string tok = spec.substr(i, star == std::string::npos ? std::string::npos : star - i);
    i = star == std::string::npos ? spec.size() : star + 1;
    if (tok.empty()) throw ParseError("empty factor in tower spec: " + spec);
    unsigned repeat = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      repeat = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
      tok = tok.substr(0, caret);
      if (repeat == 0) throw ParseError("zero repetition in tower spec: " + spec);
    }
    WreathLevel lv;
    if (tok.size() >= 2 && (tok[0] == 'A' || tok[0] == 'S')) {
      lv = (tok[0] == 'A') ? alt(static_cast<std::uint32_t>(std::stoul(tok.substr(1))))
                           : sym(static_cast<std::uint32_t>(std::stoul(tok.substr(1))));
    } else {
      throw ParseError("bad tower factor '" + tok + "' (custom levels must be resolved first)");
    }
    for (unsigned k = 0; k < repeat; ++k) levels.push_back(lv);
  }
  return WreathTower(std::move(levels));
}

std::uint64_t WreathTower::leaf_count() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_) {
    if (n > kLeafCap / lv.degree + 1) throw GrowthCapError("tower leaf count overflow", -1);
    n *= lv.degree;
  }
  return n;
}

BigInt WreathTower::order() const {
  BigInt total = 1;
  BigInt copies = 1;
  for (const auto& lv : levels_) {
    BigInt lvord = lv.group_order();
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), lvord.get_mpz_t(), copies.get_ui());
    total *= power;
    copies *= lv.degree;
  }
  return total;
}

bool WreathTower::all_levels_standard() const {
  return std::none_of(levels_.begin(), levels_.end(),
                      [](const WreathLevel& lv) { return lv.kind == LevelKind::Custom; });
}

std::string WreathTower::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) s += '*';
    s += levels_[i].to_string();
  }
  return s;
}

WreathTower WreathTower::prefix(std::size_t depth) const {
  if (depth == 0 || depth > levels_.size()) throw InvalidArgumentError("bad tower prefix depth");
  return WreathTower(std::vector<WreathLevel>(levels_.begin(), levels_.begin() + depth));
}

std::uint64_t WreathTower::leaf_index(const std::vector<std::uint32_t>& digits) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < levels_.size(); ++i) idx = idx * levels_[i].degree + digits[i];
  return idx;
}

std::vector<BlockSystem> WreathTower::natural_systems() const {
  const std::uint64_t n = leaf_count();
  std::vector<BlockSystem> out;
  std::uint64_t block_size = n;
  for (std::size_t lvl = 0; lvl + 1 < levels_.size(); ++lvl) {
    block_size /= levels_[lvl].degree;
    std::vector<std::uint32_t> class_of(n);
    for (std::uint64_t p = 0; p < n; ++p)
      class_of[p] = static_cast<std::uint32_t>(p / block_size);
    out.push_back(BlockSystem::from_classes(class_of));
  }
  return out;
}

namespace {

// Embeds a permutation acting on digit `level` of the first subtree path:
// it moves leaves whose digits before `level` are all zero.
Perm embed_at_first_path(const WreathTower& t, std::size_t level, const Perm& g) {
  const std::uint64_t n = t.leaf_count();
  std::uint64_t inner = 1; // leaves below one node at `level`
  for (std::size_t i = level + 1; i < t.depth(); ++i) inner *= t.levels()[i].degree;
  const std::uint64_t span = inner * t.levels()[level].degree;
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0u);
  // the first-path node at `level` covers leaves [0, span)
  for (std::uint64_t p = 0; p < span; ++p) {
    std::uint64_t digit = p / inner;
    std::uint64_t rest = p % inner;
    im[p] = static_cast<std::uint32_t>(g(static_cast<std::uint32_t>(digit)) * inner + rest);
  }
  return Perm(std::move(im));
}

} // namespace

PermGroup tower_group(const WreathTower& t) {
  const std::uint64_t n = t.leaf_count();
  if (n > kLeafCap) throw GrowthCapError("tower leaf count exceeds generator cap", -1);
  std::vector<Perm> gens;
  for (std::size_t lvl = 0; lvl < t.depth(); ++lvl)
    for (const auto& g : t.levels()[lvl].group_generators())
      gens.push_back(embed_at_first_path(t, lvl, g));
  return PermGroup(static_cast<std::uint32_t>(n), std::move(gens));
}

namespace {

Perm uniform_level_element(const WreathLevel& lv, Rng& rng, const PermGroup* custom_group) {
  switch (lv.kind) {
  case LevelKind::Sym:
    return uniform_symmetric(lv.degree, rng);
  case LevelKind::Alt:
    return uniform_alternating(lv.degree, rng);
  case LevelKind::Custom:
    return custom_group->uniform_element(rng);
  }
  return Perm::identity(lv.degree);
}

} // namespace

TowerSampler::TowerSampler(WreathTower t) : tower_(std::move(t)) {
  if (tower_.leaf_count() > kLeafCap)
    throw GrowthCapError("tower leaf count exceeds sampling cap", -1);
  for (const auto& lv : tower_.levels()) {
    if (lv.kind == LevelKind::Custom)
      custom_groups_.emplace_back(PermGroup(lv.degree, lv.custom_gens));
    else
      custom_groups_.emplace_back(std::nullopt);
  }
}

Perm TowerSampler::draw(Rng& rng) const {
  const WreathTower& t = tower_;
  const std::uint64_t n = t.leaf_count();
  // draws[l] holds one element per node at level l, in node-index order;
  // node count at level l is the product of the degrees above it
  std::vector<std::vector<Perm>> draws(t.depth());
  std::uint64_t count = 1;
  for (std::size_t l = 0; l < t.depth(); ++l) {
    draws[l].reserve(count);
    const PermGroup* cg = custom_groups_[l] ? &*custom_groups_[l] : nullptr;
    for (std::uint64_t k = 0; k < count; ++k)
      draws[l].push_back(uniform_level_element(t.levels()[l], rng, cg));
    count *= t.levels()[l].degree;
  }
  // leaf image: walk the tree; at each level the node's draw permutes the
  // digit, and the branch taken below is the *source* digit's child
  std::vector<std::uint32_t> im(n);
  std::vector<std::uint32_t> digits(t.depth());
  std::vector<std::uint32_t> out(t.depth());
  for (std::uint64_t p = 0; p < n; ++p) {
    std::uint64_t rest = p;
    for (std::size_t l = t.depth(); l-- > 0;) {
      digits[l] = static_cast<std::uint32_t>(rest % t.levels()[l].degree);
      rest /= t.levels()[l].degree;
    }
    std::uint64_t node = 0; // node index at the current level along the source path
    for (std::size_t l = 0; l < t.depth(); ++l) {
      const Perm& d = draws[l][node];
      out[l] = d(digits[l]);
      node = node * t.levels()[l].degree + digits[l];
    }
    im[p] = static_cast<std::uint32_t>(t.leaf_index(out));
  }
  return Perm(std::move(im));
}

Perm uniform_element(const WreathTower& t, Rng& rng) { return TowerSampler(t).draw(rng); }

} // namespace arborlab
