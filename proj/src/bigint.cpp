#include "iam/bigint.hpp"

#include <stdexcept>

namespace iam {

BigInt binomial(std::int64_t x, std::int64_t r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  if (x < 0 || r > x) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(x),
               static_cast<unsigned long>(r));
  return out;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canon = value;
  canon.canonicalize();
  if (canon.get_den() == 1) return canon.get_num().get_str();
  return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational out;
  if (out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  out.canonicalize();
  return out;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out.canonicalize();
  return out;
}

}  // namespace iam
