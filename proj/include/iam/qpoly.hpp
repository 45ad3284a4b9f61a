#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iam/bigint.hpp"

namespace iam {

/// Polynomial in q with big-integer coefficients, ascending powers, no
/// trailing zero coefficients. The zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coefficients);
  static QPoly constant(const BigInt& value);
  static QPoly monomial(int exponent, const BigInt& coefficient = 1);
  /// 1 - q^e.
  static QPoly one_minus_q_pow(int exponent);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  BigInt coefficient(int exponent) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }

  /// Exact division; throws InvariantViolation on a nonzero remainder or a
  /// non-integral quotient coefficient.
  QPoly divide_exact(const QPoly& divisor) const;

  Rational evaluate(const Rational& q) const;
  /// "1,1,2,1,1" form; "0" for the zero polynomial.
  std::string to_csv() const;
  /// Human-readable form, e.g. "1 + q + 2q^2".
  std::string to_string() const;

  bool operator==(const QPoly& other) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace iam
