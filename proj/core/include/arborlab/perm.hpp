#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arborlab {

/// Multiset of cycle lengths of a permutation, 1-cycles included.
/// Parts are kept sorted descending; their sum is the degree.
struct CycleType {
  std::vector<std::uint32_t> parts;

  CycleType() = default;
  explicit CycleType(std::vector<std::uint32_t> p);

  std::uint32_t degree() const;
  std::size_t cycle_count() const { return parts.size(); }
  std::uint32_t count_of(std::uint32_t length) const;
  bool is_even() const; // parity of a permutation with this type

  std::string to_string() const; // e.g. "[3,2,1]"
  static CycleType parse(std::string_view s);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// A permutation of {0,...,degree-1}, stored as its image table.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images); // validates bijectivity
  static Perm identity(std::uint32_t degree);

  /// Parses disjoint-cycle notation with 0-based points, e.g. "(0 1 2)(3 4)".
  /// The identity of the given degree parses from "()".
  static Perm parse(std::uint32_t degree, std::string_view s);

  /// Builds the cycle (points[0] points[1] ...) in the given degree.
  static Perm cycle(std::uint32_t degree, const std::vector<std::uint32_t>& points);
  static Perm transposition(std::uint32_t degree, std::uint32_t a, std::uint32_t b);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  bool is_even() const;
  std::uint32_t fixed_point_count() const;
  std::size_t cycle_count() const;

  /// Disjoint cycles ordered by smallest point, each starting at its
  /// smallest point. 1-cycles included when include_fixed is set.
  std::vector<std::vector<std::uint32_t>> cycles(bool include_fixed = false) const;

  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<std::uint32_t> images_;
};

/// Applies q first, then p. The composition convention every module uses.
Perm compose(const Perm& p, const Perm& q);

/// p q p^-1.
Perm conjugate(const Perm& p, const Perm& q);

CycleType cycle_type(const Perm& p);

} // namespace arborlab
