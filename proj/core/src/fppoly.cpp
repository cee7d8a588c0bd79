#include "arborlab/fppoly.hpp"

#include <algorithm>

#include "arborlab/errors.hpp"

namespace arborlab {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_int(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw InvalidArgumentError("inverse of zero mod p");
  return powmod_int(a % p, p - 2, p);
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw InvalidArgumentError("FpPoly modulus must be at least 2");
  for (auto& x : c_) x %= p_;
  normalize();
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  if (leading() == 1) return *this;
  std::uint64_t inv = invmod(leading(), p_);
  std::vector<std::uint64_t> c(c_);
  for (auto& x : c) x = mulmod(x, inv, p_);
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return zero(p_);
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(d));
}

std::uint64_t FpPoly::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = (mulmod(acc, x, p_) + c_[i]) % p_;
  return acc;
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
    if (i >= 1) {
      if (c_[i] != 1) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

void check_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus())
    throw InvalidArgumentError("FpPoly operands over different primes");
}

} // namespace

FpPoly add(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % p;
  return FpPoly(p, std::move(c));
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + p - b.coeff(i)) % p;
  return FpPoly(p, std::move(c));
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  const std::uint64_t p = a.modulus();
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(p);
  std::vector<std::uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a.coeff(i), b.coeff(j), p)) % p;
  }
  return FpPoly(p, std::move(c));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw InvalidArgumentError("FpPoly division by zero");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly::zero(p), a};
  std::vector<std::uint64_t> rem(a.coeffs());
  std::vector<std::uint64_t> quot(a.degree() - b.degree() + 1, 0);
  const std::uint64_t lead_inv = invmod(b.leading(), p);
  for (long k = a.degree(); k >= b.degree(); --k) {
    std::uint64_t f = mulmod(rem[k], lead_inv, p);
    if (f == 0) continue;
    quot[k - b.degree()] = f;
    for (long j = 0; j <= b.degree(); ++j) {
      auto idx = static_cast<std::size_t>(k - b.degree() + j);
      rem[idx] = (rem[idx] + p - mulmod(f, b.coeff(j), p)) % p;
    }
  }
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly mod(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = mod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

FpPoly compose(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  const std::uint64_t p = a.modulus();
  FpPoly acc = FpPoly::zero(p);
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    acc = add(mul(acc, b), FpPoly::constant(p, a.coeff(i)));
  return acc;
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  check_same_field(base, m);
  FpPoly r = FpPoly::constant(base.modulus(), 1);
  FpPoly b = mod(base, m);
  while (e) {
    if (e & 1) r = mod(mul(r, b), m);
    b = mod(mul(b, b), m);
    e >>= 1;
  }
  return r;
}

namespace {

// p-th root of a polynomial in x^p: over the prime field the coefficients
// are their own p-th roots
FpPoly pth_root(const FpPoly& g) {
  const std::uint64_t p = g.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < g.coeffs().size(); i += static_cast<std::size_t>(p))
    c.push_back(g.coeff(i));
  return FpPoly(p, std::move(c));
}

} // namespace

FpPoly radical(const FpPoly& g) {
  if (g.is_zero()) throw InvalidArgumentError("radical of the zero polynomial");
  FpPoly f = g.monic();
  if (f.degree() <= 0) return f;
  FpPoly fprime = f.derivative();
  if (fprime.is_zero()) return radical(pth_root(f)); // f is a p-th power
  // gcd(f, f') = prod_{p not| e_i} f_i^(e_i - 1) * prod_{p | e_i} f_i^(e_i),
  // so f / gcd is the radical of the non-p part, and stripping that part
  // from the gcd leaves a pure p-th power
  FpPoly c = gcd(f, fprime);
  FpPoly w = divmod(f, c).first;
  for (FpPoly shared = gcd(c, w); shared.degree() > 0; shared = gcd(c, w))
    c = divmod(c, shared).first;
  if (c.degree() > 0) w = mul(w, radical(pth_root(c)));
  return w.monic();
}

std::uint64_t factor_count_mod_p(const FpPoly& g) {
  if (g.is_zero()) throw InvalidArgumentError("factor count of zero polynomial mod p");
  FpPoly m = radical(g);
  const long n = m.degree();
  if (n <= 0) return 0;
  const std::uint64_t p = m.modulus();
  // Berlekamp matrix: rows are x^(i p) mod m
  FpPoly xp = powmod(FpPoly::x(p), p, m);
  std::vector<std::vector<std::uint64_t>> q(static_cast<std::size_t>(n),
                                            std::vector<std::uint64_t>(n, 0));
  FpPoly row = FpPoly::constant(p, 1);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j <= row.degree(); ++j) q[i][j] = row.coeff(j);
    row = mod(mul(row, xp), m);
  }
  // nullity of (Q - I)
  for (long i = 0; i < n; ++i) q[i][i] = (q[i][i] + p - 1) % p;
  long rank = 0;
  long col = 0;
  for (long r = 0; r < n && col < n; ++col) {
    long pivot = -1;
    for (long i = r; i < n; ++i)
      if (q[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(q[r], q[pivot]);
    std::uint64_t inv = invmod(q[r][col], p);
    for (long j = col; j < n; ++j) q[r][j] = mulmod(q[r][j], inv, p);
    for (long i = 0; i < n; ++i) {
      if (i == r || q[i][col] == 0) continue;
      std::uint64_t f = q[i][col];
      for (long j = col; j < n; ++j) q[i][j] = (q[i][j] + p - mulmod(f, q[r][j], p)) % p;
    }
    ++rank;
    ++r;
  }
  return static_cast<std::uint64_t>(n - rank);
}

std::vector<std::uint32_t> factor_degree_multiset(const FpPoly& g) {
  if (g.is_zero()) throw InvalidArgumentError("factor degrees of zero polynomial mod p");
  FpPoly m = radical(g);
  const std::uint64_t p = m.modulus();
  std::vector<std::uint32_t> out;
  FpPoly h = FpPoly::x(p); // x^(p^k) mod m, built incrementally
  std::uint32_t k = 0;
  while (m.degree() > 0) {
    ++k;
    if (2L * k > m.degree()) {
      // remainder is a single irreducible factor
      out.push_back(static_cast<std::uint32_t>(m.degree()));
      break;
    }
    h = powmod(h, p, m);
    FpPoly d = gcd(sub(h, FpPoly::x(p)), m);
    if (d.degree() > 0) {
      for (long i = 0; i < d.degree() / k; ++i) out.push_back(k);
      m = divmod(m, d).first;
      h = mod(h, m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace arborlab
