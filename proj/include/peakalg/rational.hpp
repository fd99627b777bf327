#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace peakalg {

/* All coefficients in the library are exact rationals backed by GMP.
 * Serialized form is "p/q" in lowest terms with q > 0; integers drop
 * the "/1" suffix. */
using Rational = mpq_class;
using Integer = mpz_class;

/* 2^e for any integer e (negative gives 1/2^|e|). */
Rational pow2(long e);

bool is_integer(const Rational& r);

std::string rational_str(const Rational& r);

/* Parses "p/q" or "p". Throws std::invalid_argument on malformed input. */
Rational parse_rational(std::string_view s);

}  // namespace peakalg
