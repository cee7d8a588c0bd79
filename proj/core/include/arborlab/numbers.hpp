#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace arborlab {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// q^e for e >= 0.
Rational rational_pow(const Rational& q, unsigned long e);

/// Renders a rational as "num/den" ("num" when den == 1).
std::string rational_str(const Rational& q);

/// Parses "num", "num/den", or a decimal-free signed integer string.
Rational parse_rational(const std::string& s);

std::string bigint_str(const BigInt& n);

/// Exact v_p of a nonzero integer.
long valuation(const BigInt& n, const BigInt& p);

} // namespace arborlab
