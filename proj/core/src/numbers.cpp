#include "arborlab/numbers.hpp"

#include "arborlab/errors.hpp"

namespace arborlab {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rational_pow(const Rational& q, unsigned long e) {
  Rational r(1);
  Rational base = q;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      BigInt n(s);
      Rational r(n);
      r.canonicalize();
      return r;
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: " + s);
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational: " + s);
  }
}

std::string bigint_str(const BigInt& n) { return n.get_str(); }

long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw InvalidArgumentError("valuation of zero");
  BigInt m = abs(n);
  long v = 0;
  BigInt q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

} // namespace arborlab
