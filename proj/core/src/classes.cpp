#include "arborlab/classes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arborlab/errors.hpp"

namespace arborlab {

std::vector<CycleType> partitions_of(std::uint32_t n) {
  std::vector<CycleType> out;
  std::vector<std::uint32_t> current;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest,
                                                              std::uint32_t max_part) {
    if (rest == 0) {
      out.emplace_back(CycleType(current));
      return;
    }
    for (std::uint32_t part = std::min(rest, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(rest - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt class_size(const CycleType& type) {
  std::map<std::uint32_t, std::uint32_t> mult;
  for (auto p : type.parts) ++mult[p];
  BigInt denom = 1;
  for (auto [len, count] : mult) {
    for (std::uint32_t i = 0; i < count; ++i) denom *= len;
    denom *= factorial(count);
  }
  return factorial(type.degree()) / denom;
}

namespace {

struct ClassEnumerator {
  std::uint32_t degree;
  std::map<std::uint32_t, std::uint32_t> lengths; // remaining multiplicities
  std::vector<bool> placed;
  std::vector<std::uint32_t> images;
  const std::function<bool(const Perm&)>* visit;
  bool stopped = false;

  std::uint32_t smallest_unplaced() const {
    for (std::uint32_t p = 0; p < degree; ++p)
      if (!placed[p]) return p;
    return degree;
  }

  void run() {
    std::uint32_t start = smallest_unplaced();
    if (start == degree) {
      if (!(*visit)(Perm(images))) stopped = true;
      return;
    }
    // the cycle of the smallest unplaced point: pick its length, then the
    // ordered remainder of the cycle
    for (auto& [len, count] : lengths) {
      if (count == 0) continue;
      --count;
      placed[start] = true;
      extend_cycle(start, start, len - 1);
      placed[start] = false;
      ++count;
      if (stopped) return;
    }
  }

  void extend_cycle(std::uint32_t start, std::uint32_t last, std::uint32_t remaining) {
    if (stopped) return;
    if (remaining == 0) {
      images[last] = start;
      run();
      return;
    }
    for (std::uint32_t p = start + 1; p < degree; ++p) {
      if (placed[p]) continue;
      placed[p] = true;
      images[last] = p;
      extend_cycle(start, p, remaining - 1);
      placed[p] = false;
      if (stopped) return;
    }
  }
};

} // namespace

void for_each_of_cycle_type(const CycleType& type,
                            const std::function<bool(const Perm&)>& visit) {
  ClassEnumerator e;
  e.degree = type.degree();
  for (auto p : type.parts) ++e.lengths[p];
  e.placed.assign(e.degree, false);
  e.images.assign(e.degree, 0);
  e.visit = &visit;
  e.run();
}

Perm uniform_of_cycle_type(const CycleType& type, Rng& rng) {
  const std::uint32_t d = type.degree();
  std::vector<std::uint32_t> seq(d);
  std::iota(seq.begin(), seq.end(), 0u);
  for (std::uint32_t i = d; i > 1; --i)
    std::swap(seq[i - 1], seq[rng.next_below(i)]);
  std::vector<std::uint32_t> images(d);
  std::size_t pos = 0;
  for (auto len : type.parts) {
    for (std::uint32_t k = 0; k < len; ++k)
      images[seq[pos + k]] = seq[pos + (k + 1) % len];
    pos += len;
  }
  return Perm(std::move(images));
}

Perm uniform_symmetric(std::uint32_t degree, Rng& rng) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  for (std::uint32_t i = degree; i > 1; --i)
    std::swap(im[i - 1], im[rng.next_below(i)]);
  return Perm(std::move(im));
}

Perm uniform_alternating(std::uint32_t degree, Rng& rng) {
  if (degree < 3) return Perm::identity(degree);
  Perm p = uniform_symmetric(degree, rng);
  if (!p.is_even()) p = compose(Perm::transposition(degree, 0, 1), p);
  return p;
}

} // namespace arborlab
