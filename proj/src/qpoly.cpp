#include "iam/qpoly.hpp"

#include <stdexcept>

#include "iam/core.hpp"

namespace iam {

QPoly::QPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

QPoly QPoly::constant(const BigInt& value) { return QPoly({value}); }

QPoly QPoly::monomial(int exponent, const BigInt& coefficient) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1, 0);
  c.back() = coefficient;
  return QPoly(std::move(c));
}

QPoly QPoly::one_minus_q_pow(int exponent) {
  return QPoly::constant(1) - QPoly::monomial(exponent);
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] += other.coeffs_[e];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] -= other.coeffs_[e];
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw InvariantViolation("polynomial division leaves a remainder");
  std::vector<BigInt> rem = coeffs_;
  const int dd = divisor.degree();
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (int e = degree() - dd; e >= 0; --e) {
    BigInt& top = rem[static_cast<std::size_t>(e + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InvariantViolation("polynomial division has a non-integral coefficient");
    }
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[static_cast<std::size_t>(e)] = factor;
    for (int s = 0; s <= dd; ++s) rem[static_cast<std::size_t>(e + s)] -= factor * divisor.coeffs_[static_cast<std::size_t>(s)];
  }
  for (const auto& c : rem)
    if (c != 0) throw InvariantViolation("polynomial division leaves a remainder");
  return QPoly(std::move(quot));
}

Rational QPoly::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Rational(*it);
  acc.canonicalize();
  return acc;
}

std::string QPoly::to_csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (e) out += ',';
    out += iam::to_string(coeffs_[e]);
  }
  return out;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const bool show = mag != 1 || e == 0;
    if (show) out += iam::to_string(mag);
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace iam
