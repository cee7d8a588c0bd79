#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arborlab {

/// Dense polynomial over the prime field F_p, coefficients in [0, p).
/// Kept normalized: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient vector.
class FpPoly {
public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs); // coeffs[i] = coefficient of x^i

  static FpPoly zero(std::uint64_t p) { return FpPoly(p, {}); }
  static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }
  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;
  std::uint64_t evaluate(std::uint64_t x) const;
  std::string to_string() const;

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

private:
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> c_;
  void normalize();
};

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly mod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(const FpPoly& a, const FpPoly& b); // monic

/// a(b(x)), Horner.
FpPoly compose(const FpPoly& a, const FpPoly& b);

/// base^e mod m.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

/// Product of the distinct irreducible factors (squarefree part), handling
/// p-th power descent via the Frobenius identity on F_p coefficients.
FpPoly radical(const FpPoly& g);

/// Number of distinct irreducible factors of g mod p: the dimension of the
/// fixed space of the p-power Frobenius on F_p[x]/(radical(g)).
/// g must be nonzero mod p.
std::uint64_t factor_count_mod_p(const FpPoly& g);

/// Multiset of degrees of the distinct irreducible factors of the
/// squarefree part, by distinct-degree factorization. Returned sorted.
std::vector<std::uint32_t> factor_degree_multiset(const FpPoly& g);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_int(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

} // namespace arborlab
