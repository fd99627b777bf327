#include "peakalg/rational.hpp"

#include <stdexcept>

namespace peakalg {

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

bool is_integer(const Rational& r) {
  return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

std::string rational_str(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_str();
}

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw std::invalid_argument("invalid rational literal '" + std::string(s) +
                                "'");
  if (mpz_sgn(r.get_den().get_mpz_t()) == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

}  // namespace peakalg
