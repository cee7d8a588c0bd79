#include "arborlab/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "arborlab/errors.hpp"

namespace arborlab {

CycleType::CycleType(std::vector<std::uint32_t> p) : parts(std::move(p)) {
  for (auto x : parts)
    if (x == 0) throw InvalidArgumentError("cycle type parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

std::uint32_t CycleType::degree() const {
  std::uint32_t d = 0;
  for (auto x : parts) d += x;
  return d;
}

std::uint32_t CycleType::count_of(std::uint32_t length) const {
  return static_cast<std::uint32_t>(std::count(parts.begin(), parts.end(), length));
}

bool CycleType::is_even() const {
  // sign = (-1)^(degree - #cycles)
  return ((degree() - parts.size()) % 2) == 0;
}

std::string CycleType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

CycleType CycleType::parse(std::string_view s) {
  std::vector<std::uint32_t> parts;
  std::string tok;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      tok += c;
    } else if (c == '[' || c == ']' || c == ',' || c == ' ') {
      if (!tok.empty()) {
        parts.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        tok.clear();
      }
    } else {
      throw ParseError("bad character in cycle type: " + std::string(s));
    }
  }
  if (!tok.empty()) parts.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  if (parts.empty()) throw ParseError("empty cycle type: " + std::string(s));
  return CycleType(std::move(parts));
}

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgumentError("image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  Perm p;
  p.images_ = std::move(im);
  return p;
}

Perm Perm::cycle(std::uint32_t degree, const std::vector<std::uint32_t>& points) {
  Perm p = identity(degree);
  if (points.size() < 2) return p;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint32_t from = points[i];
    std::uint32_t to = points[(i + 1) % points.size()];
    if (from >= degree || to >= degree) throw InvalidArgumentError("cycle point out of range");
    if (p.images_[from] != from && p.images_[from] != to)
      throw InvalidArgumentError("repeated point in cycle");
    p.images_[from] = to;
  }
  return p;
}

Perm Perm::transposition(std::uint32_t degree, std::uint32_t a, std::uint32_t b) {
  return cycle(degree, {a, b});
}

Perm Perm::parse(std::uint32_t degree, std::string_view s) {
  Perm p = identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '(' in permutation: " + std::string(s));
    ++i;
    std::vector<std::uint32_t> cyc;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad point in permutation: " + std::string(s));
      std::uint32_t v = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') v = v * 10 + (s[i++] - '0');
      if (v >= degree) throw ParseError("point " + std::to_string(v) + " out of range for degree " + std::to_string(degree));
      if (used[v]) throw ParseError("point repeated across cycles: " + std::to_string(v));
      used[v] = true;
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= s.size()) throw ParseError("unterminated cycle: " + std::string(s));
    ++i; // ')'
    any = true;
    if (cyc.size() >= 2) {
      for (std::size_t k = 0; k < cyc.size(); ++k)
        p.images_[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation string");
  return p;
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::uint32_t i = 0; i < degree(); ++i) im[images_[i]] = i;
  Perm p;
  p.images_ = std::move(im);
  return p;
}

bool Perm::is_even() const {
  return ((degree() - cycle_count()) % 2) == 0;
}

std::uint32_t Perm::fixed_point_count() const {
  std::uint32_t n = 0;
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

std::size_t Perm::cycle_count() const {
  std::vector<bool> seen(degree(), false);
  std::size_t n = 0;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++n;
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return n;
}

std::vector<std::vector<std::uint32_t>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::to_cycle_string() const {
  auto cycs = cycles(false);
  if (cycs.empty()) return "()";
  std::string s;
  for (const auto& c : cycs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("compose: degree " + std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
  std::vector<std::uint32_t> im(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) im[i] = p(q(i));
  return Perm(std::move(im));
}

Perm conjugate(const Perm& p, const Perm& q) {
  return compose(compose(p, q), p.inverse());
}

CycleType cycle_type(const Perm& p) {
  std::vector<std::uint32_t> parts;
  for (const auto& c : p.cycles(true)) parts.push_back(static_cast<std::uint32_t>(c.size()));
  return CycleType(std::move(parts));
}

} // namespace arborlab
