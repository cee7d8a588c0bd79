#include "arborlab/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "arborlab/errors.hpp"

namespace arborlab {

bool Mod2Submodule::contains(std::uint32_t v) const {
  for (auto b : basis) {
    std::uint32_t low = b & ~(b - 1);
    if (v & low) v ^= b;
  }
  return v == 0;
}

std::string Mod2Submodule::label_string() const {
  switch (label) {
  case Label::Trivial:
    return "trivial";
  case Label::Diagonal:
    return "diagonal";
  case Label::Augmentation:
    return "augmentation";
  case Label::Full:
    return "full";
  }
  return "?";
}

Mod2Submodule::Label Mod2Submodule::parse_label(const std::string& s) {
  if (s == "trivial") return Label::Trivial;
  if (s == "diagonal") return Label::Diagonal;
  if (s == "augmentation") return Label::Augmentation;
  if (s == "full") return Label::Full;
  throw ParseError("unknown kernel label: " + s);
}

namespace {

// canonical reduced echelon basis (lowest-bit pivots, fully back-reduced);
// equal subspaces get identical bases
std::vector<std::uint32_t> echelon(std::vector<std::uint32_t> vecs) {
  std::vector<std::uint32_t> basis;
  for (auto v : vecs) {
    for (auto b : basis) {
      std::uint32_t low = b & ~(b - 1);
      if (v & low) v ^= b;
    }
    if (v) basis.push_back(v);
    std::sort(basis.begin(), basis.end(), [](std::uint32_t a, std::uint32_t b) {
      return (a & ~(a - 1)) < (b & ~(b - 1));
    });
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::uint32_t low = basis[i] & ~(basis[i] - 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i && (basis[j] & low)) basis[j] ^= basis[i];
  }
  return basis;
}

std::uint32_t apply_perm_to_mask(const Perm& g, std::uint32_t mask, std::uint32_t d) {
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < d; ++i)
    if (mask & (1u << i)) out |= (1u << g(i));
  return out;
}

} // namespace

std::vector<std::vector<std::uint32_t>> enumerate_invariant_subspaces(std::uint32_t d) {
  if (d > 8) throw OrderCapError("exhaustive subspace sweep capped at d = 8");
  auto gens = PermGroup::alternating(d).generators();
  // cyclic submodule of each vector: close the orbit span
  std::set<std::vector<std::uint32_t>> modules;
  std::vector<std::vector<std::uint32_t>> cyclic;
  for (std::uint32_t v = 0; v < (1u << d); ++v) {
    std::set<std::uint32_t> span_vectors{0};
    std::vector<std::uint32_t> frontier{v};
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (auto w : frontier) {
        std::vector<std::uint32_t> sums;
        for (auto u : span_vectors) sums.push_back(u ^ w);
        for (auto s : sums)
          if (span_vectors.insert(s).second) next.push_back(s);
        for (const auto& g : gens) {
          std::uint32_t img = apply_perm_to_mask(g, w, d);
          if (!span_vectors.count(img)) next.push_back(img);
        }
      }
      frontier = std::move(next);
    }
    std::vector<std::uint32_t> basis =
        echelon(std::vector<std::uint32_t>(span_vectors.begin(), span_vectors.end()));
    cyclic.push_back(basis);
    modules.insert(basis);
  }
  // close under joins
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::uint32_t>> snapshot(modules.begin(), modules.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<std::uint32_t> joined = snapshot[i];
        joined.insert(joined.end(), snapshot[j].begin(), snapshot[j].end());
        if (modules.insert(echelon(joined)).second) grew = true;
      }
  }
  return {modules.begin(), modules.end()};
}

std::vector<Mod2Submodule> invariant_submodules(std::uint32_t d) {
  if (d < 5)
    throw InvalidArgumentError("invariant_submodules needs d >= 5 (module structure differs)");
  if (d > 31) throw OrderCapError("bit-mask representation capped at d = 31");
  std::vector<Mod2Submodule> out;
  Mod2Submodule trivial{Mod2Submodule::Label::Trivial, d, {}};
  Mod2Submodule diagonal{Mod2Submodule::Label::Diagonal, d, {(1u << d) - 1}};
  Mod2Submodule augmentation{Mod2Submodule::Label::Augmentation, d, {}};
  for (std::uint32_t i = 0; i + 1 < d; ++i)
    augmentation.basis.push_back((1u << i) | (1u << (i + 1)));
  augmentation.basis = echelon(augmentation.basis);
  Mod2Submodule full{Mod2Submodule::Label::Full, d, {}};
  for (std::uint32_t i = 0; i < d; ++i) full.basis.push_back(1u << i);
  out = {trivial, diagonal, augmentation, full};

  if (d <= 8) {
    // exhaustive sweep must reproduce exactly these four
    auto swept = enumerate_invariant_subspaces(d);
    std::set<std::vector<std::uint32_t>> expected;
    for (const auto& m : out) expected.insert(m.basis.empty() ? std::vector<std::uint32_t>{}
                                                              : echelon(m.basis));
    std::set<std::vector<std::uint32_t>> found(swept.begin(), swept.end());
    if (expected != found)
      throw Error("invariant submodule sweep disagrees with the standard description at d = " +
                  std::to_string(d));
  }
  return out;
}

PermGroup c2_wr_alt(std::uint32_t d) {
  std::vector<Perm> gens;
  const std::vector<Perm> alt_gens = PermGroup::alternating(d).generators();
  for (const auto& a : alt_gens) {
    std::vector<std::uint32_t> im(2 * d);
    for (std::uint32_t i = 0; i < d; ++i) {
      im[2 * i] = 2 * a(i);
      im[2 * i + 1] = 2 * a(i) + 1;
    }
    gens.push_back(Perm(std::move(im)));
  }
  gens.push_back(kernel_vector_perm(d, 1)); // flip the first pair
  return PermGroup(2 * d, std::move(gens));
}

BlockSystem c2_wr_alt_blocks(std::uint32_t d) {
  std::vector<std::uint32_t> class_of(2 * d);
  for (std::uint32_t i = 0; i < 2 * d; ++i) class_of[i] = i / 2;
  return BlockSystem::from_classes(class_of);
}

Perm kernel_vector_perm(std::uint32_t d, std::uint32_t mask) {
  std::vector<std::uint32_t> im(2 * d);
  std::iota(im.begin(), im.end(), 0u);
  for (std::uint32_t i = 0; i < d; ++i)
    if (mask & (1u << i)) std::swap(im[2 * i], im[2 * i + 1]);
  return Perm(std::move(im));
}

std::pair<Perm, Perm> alternating_generator_pair(std::uint32_t d) {
  Perm x = Perm::cycle(d, {0, 1, 2});
  std::vector<std::uint32_t> pts;
  if (d % 2 == 1)
    for (std::uint32_t i = 0; i < d; ++i) pts.push_back(i);
  else
    for (std::uint32_t i = 1; i < d; ++i) pts.push_back(i);
  return {x, Perm::cycle(d, pts)};
}

std::vector<std::string> alternating_relations(std::uint32_t d) {
  // verified by coset enumeration to present a group of order d!/2
  switch (d) {
  case 5:
    return {"xxx", "yyyyy", "xyyxyy"};
  case 6:
    return {"xxx", "yyyyy", "YXYXYXYX", "xyXYxyXY"};
  case 7:
    return {"xxx", "yyyyyyy", "YXyXYXyX", "YYXYYXYYX", "xYxYxYxYxY"};
  default:
    throw InvalidArgumentError("relation table covers d in {5,6,7}");
  }
}

Perm evaluate_word(const std::string& word, const Perm& x, const Perm& y) {
  Perm acc = Perm::identity(x.degree());
  const Perm xi = x.inverse(), yi = y.inverse();
  for (char c : word) {
    const Perm* g = nullptr;
    switch (c) {
    case 'x':
      g = &x;
      break;
    case 'X':
      g = &xi;
      break;
    case 'y':
      g = &y;
      break;
    case 'Y':
      g = &yi;
      break;
    default:
      throw ParseError("bad letter in relation word");
    }
    acc = compose(acc, *g);
  }
  return acc;
}

namespace {

Perm top_lift(std::uint32_t d, const Perm& a) {
  std::vector<std::uint32_t> im(2 * d);
  for (std::uint32_t i = 0; i < d; ++i) {
    im[2 * i] = 2 * a(i);
    im[2 * i + 1] = 2 * a(i) + 1;
  }
  return Perm(std::move(im));
}

// image of one element on the pair blocks
Perm pair_image(std::uint32_t d, const Perm& g) {
  std::vector<std::uint32_t> im(d);
  for (std::uint32_t i = 0; i < d; ++i) im[i] = g(2 * i) / 2;
  return Perm(std::move(im));
}

// coset representatives of K inside C_2^d, as masks (canonical: reduced)
std::vector<std::uint32_t> quotient_reps(std::uint32_t d, const Mod2Submodule& k) {
  std::vector<std::uint32_t> reps;
  std::set<std::uint32_t> seen;
  for (std::uint32_t v = 0; v < (1u << d); ++v) {
    std::uint32_t r = v;
    for (auto b : k.basis) {
      std::uint32_t low = b & ~(b - 1);
      if (r & low) r ^= b;
    }
    if (seen.insert(r).second) reps.push_back(r);
  }
  return reps;
}

} // namespace

std::vector<PermGroup> groups_with_kernel(std::uint32_t d, const Mod2Submodule& k) {
  if (d < 5 || d > 7) throw InvalidArgumentError("groups_with_kernel supports d in {5,6,7}");
  if (k.d != d) throw InvalidArgumentError("kernel dimension mismatch");
  auto [a, b] = alternating_generator_pair(d);
  const Perm a_lift = top_lift(d, a);
  const Perm b_lift = top_lift(d, b);
  const BigInt target_order = (factorial(d) / 2) << k.dimension();

  std::vector<Perm> kernel_gens;
  for (auto mask : k.basis) kernel_gens.push_back(kernel_vector_perm(d, mask));

  const BlockSystem pairs = c2_wr_alt_blocks(d);
  std::vector<std::uint32_t> reps = quotient_reps(d, k);

  std::vector<PermGroup> found;
  for (auto va : reps) {
    for (auto vb : reps) {
      std::vector<Perm> gens = kernel_gens;
      gens.push_back(compose(kernel_vector_perm(d, va), a_lift));
      gens.push_back(compose(kernel_vector_perm(d, vb), b_lift));
      PermGroup g(2 * d, std::move(gens));
      if (g.order() != target_order) continue;
      PermGroup kernel = block_kernel(g, pairs);
      if (kernel.order() != (BigInt(1) << k.dimension())) continue;
      bool kernel_matches = true;
      for (const auto& kg : kernel.generators()) {
        std::uint32_t mask = 0;
        for (std::uint32_t i = 0; i < d; ++i)
          if (kg(2 * i) != 2 * i) mask |= (1u << i);
        if (!k.contains(mask)) {
          kernel_matches = false;
          break;
        }
      }
      if (!kernel_matches) continue;
      if (block_action(g, pairs).order() != factorial(d) / 2) continue;
      bool duplicate = false;
      for (const auto& known : found)
        if (g.is_subgroup_of(known)) {
          duplicate = true;
          break;
        }
      if (!duplicate) found.push_back(std::move(g));
    }
  }
  return found;
}

std::optional<SectionWitness> find_section(const PermGroup& g, std::uint32_t d) {
  if (g.degree() != 2 * d) throw DegreeMismatchError("find_section expects the 2d-point action");
  const BlockSystem pairs = c2_wr_alt_blocks(d);
  PermGroup kernel = block_kernel(g, pairs);
  if (kernel.order() > 128) throw OrderCapError("find_section caps the kernel at 2^7");
  auto [a, b] = alternating_generator_pair(d);
  const auto relations = alternating_relations(d);

  // one lift of each generator image, by BFS through the block action
  std::map<Perm, Perm> lift;
  lift[Perm::identity(d)] = Perm::identity(2 * d);
  std::vector<Perm> frontier{Perm::identity(d)};
  std::vector<std::pair<Perm, Perm>> action_gens;
  for (const auto& gg : g.generators()) action_gens.push_back({pair_image(d, gg), gg});
  while (!frontier.empty() && (!lift.count(a) || !lift.count(b))) {
    std::vector<Perm> next;
    for (const auto& img : frontier)
      for (const auto& [gi, gl] : action_gens) {
        Perm nimg = compose(gi, img);
        if (lift.count(nimg)) continue;
        lift[nimg] = compose(gl, lift[img]);
        next.push_back(nimg);
      }
    frontier = std::move(next);
  }
  if (!lift.count(a) || !lift.count(b))
    throw InvalidArgumentError("group does not project onto Alt(d)");

  std::vector<Perm> kernel_elems = kernel.elements(256);
  for (const auto& ka : kernel_elems) {
    Perm xa = compose(lift[a], ka);
    for (const auto& kb : kernel_elems) {
      Perm yb = compose(lift[b], kb);
      bool ok = true;
      for (const auto& rel : relations)
        if (!evaluate_word(rel, xa, yb).is_identity()) {
          ok = false;
          break;
        }
      if (ok) return SectionWitness{xa, yb};
    }
  }
  return std::nullopt;
}

nlohmann::json SplittingCertificate::to_json() const {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& gens : group_generators) groups.push_back(gens);
  nlohmann::json wits = nlohmann::json::array();
  for (const auto& [xs, ys] : witnesses) wits.push_back({{"x", xs}, {"y", ys}});
  return {{"d", d},
          {"kernel", kernel_label},
          {"groupsFound", groups_found},
          {"allSplit", all_split},
          {"groups", groups},
          {"witnesses", wits}};
}

SplittingCertificate SplittingCertificate::from_json(const nlohmann::json& j) {
  SplittingCertificate c;
  c.d = j.at("d").get<std::uint32_t>();
  c.kernel_label = j.at("kernel").get<std::string>();
  c.groups_found = j.at("groupsFound").get<std::size_t>();
  c.all_split = j.at("allSplit").get<bool>();
  for (const auto& gens : j.at("groups"))
    c.group_generators.push_back(gens.get<std::vector<std::string>>());
  for (const auto& w : j.at("witnesses"))
    c.witnesses.push_back({w.at("x").get<std::string>(), w.at("y").get<std::string>()});
  return c;
}

namespace {

Mod2Submodule submodule_by_label(std::uint32_t d, const std::string& label) {
  for (const auto& m : invariant_submodules(d))
    if (m.label_string() == label) return m;
  throw InvalidArgumentError("unknown kernel label " + label);
}

} // namespace

SplittingCertificate splitting_certificate(std::uint32_t d, const Mod2Submodule& k) {
  SplittingCertificate cert;
  cert.d = d;
  cert.kernel_label = k.label_string();
  auto groups = groups_with_kernel(d, k);
  cert.groups_found = groups.size();
  cert.all_split = true;
  for (const auto& g : groups) {
    std::vector<std::string> gens;
    for (const auto& gg : g.generators()) gens.push_back(gg.to_cycle_string());
    cert.group_generators.push_back(std::move(gens));
    auto witness = find_section(g, d);
    if (!witness) {
      cert.all_split = false;
      cert.witnesses.push_back({"", ""});
    } else {
      cert.witnesses.push_back(
          {witness->x_image.to_cycle_string(), witness->y_image.to_cycle_string()});
    }
  }
  return cert;
}

bool verify_certificate(const SplittingCertificate& cert) {
  Mod2Submodule k = submodule_by_label(cert.d, cert.kernel_label);
  auto groups = groups_with_kernel(cert.d, k);
  if (groups.size() != cert.groups_found) return false;
  if (cert.witnesses.size() != groups.size()) return false;
  auto [a, b] = alternating_generator_pair(cert.d);
  const auto relations = alternating_relations(cert.d);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& [xs, ys] = cert.witnesses[i];
    if (xs.empty()) {
      if (cert.all_split) return false;
      continue;
    }
    Perm x = Perm::parse(2 * cert.d, xs);
    Perm y = Perm::parse(2 * cert.d, ys);
    if (!groups[i].contains(x) || !groups[i].contains(y)) return false;
    // witnesses must project onto the fixed generating pair
    std::vector<std::uint32_t> xim(cert.d), yim(cert.d);
    for (std::uint32_t pt = 0; pt < cert.d; ++pt) {
      xim[pt] = x(2 * pt) / 2;
      yim[pt] = y(2 * pt) / 2;
    }
    if (!(Perm(xim) == a) || !(Perm(yim) == b)) return false;
    for (const auto& rel : relations)
      if (!evaluate_word(rel, x, y).is_identity()) return false;
  }
  return true;
}

} // namespace arborlab
