#include "iam/formulas.hpp"

#include <stdexcept>
#include <string>

#include "iam/core.hpp"

namespace iam {

BigInt hprod(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("hprod arguments must be nonnegative");
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int l = 1; l <= c; ++l) {
        num *= i + j + l - 1;
        den *= i + j + l - 2;
      }
  BigInt quotient;
  BigInt remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (remainder != 0) {
    throw InvariantViolation("H(" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ") is not an integer");
  }
  return quotient;
}

BigInt count_iams(int m, int n, int k) {
  require_k_in_range(m, n, k);
  return hprod(m - k + 1, n - k + 1, k - 1);
}

std::string_view to_string(SymmetryClassTag tag) {
  switch (tag) {
    case SymmetryClassTag::U: return "U";
    case SymmetryClassTag::DS: return "DS";
    case SymmetryClassTag::AS: return "AS";
    case SymmetryClassTag::DAS: return "DAS";
    case SymmetryClassTag::VS: return "VS";
    case SymmetryClassTag::HS: return "HS";
    case SymmetryClassTag::VHS: return "VHS";
    case SymmetryClassTag::QTS: return "QTS";
    case SymmetryClassTag::HTS: return "HTS";
    case SymmetryClassTag::TS: return "TS";
  }
  return "?";
}

SymmetryClassTag parse_symmetry_tag(std::string_view text) {
  for (auto tag : kAllSymmetryTags)
    if (to_string(tag) == text) return tag;
  throw std::invalid_argument("unknown symmetry class '" + std::string(text) + "'");
}

bool requires_square(SymmetryClassTag tag) {
  switch (tag) {
    case SymmetryClassTag::DS:
    case SymmetryClassTag::AS:
    case SymmetryClassTag::DAS:
    case SymmetryClassTag::QTS:
    case SymmetryClassTag::TS:
      return true;
    default:
      return false;
  }
}

namespace {

bool odd(int x) { return x % 2 != 0; }

// prod_{1<=i<=j<=r} (k+i+j-2)/(i+j-1): symmetric plane partitions in an
// r x r x (k-1) box.
BigInt symmetric_pp(int r, int k) {
  Rational value = 1;
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) value *= Rational(k + i + j - 2, i + j - 1);
  value.canonicalize();
  if (value.get_den() != 1) throw InvariantViolation("symmetric plane partition count not integral");
  return value.get_num();
}

BigInt transpose_complementary(int n, int k) {
  if (!odd(k)) return 0;
  Rational value = Rational(binomial(n - (k + 1) / 2, n - k));
  for (int i = 1; i <= n - k - 1; ++i)
    for (int j = i; j <= n - k - 1; ++j) value *= Rational(k + i + j, i + j + 1);
  value.canonicalize();
  if (value.get_den() != 1) throw InvariantViolation("transpose-complementary count not integral");
  return value.get_num();
}

BigInt diagonal_antidiagonal(int n, int k) {
  if (!odd(k)) return 0;
  if (odd(n)) return hprod((n - k + 2) / 2, (n - k) / 2, (k - 1) / 2);
  return hprod((n - k + 1) / 2, (n - k + 1) / 2, (k - 1) / 2);
}

// The mixed-parity branches hold when m-k+1 is even: (m odd, n even) for
// even k, (m even, n odd) for odd k. Other mixed inputs are transposed.
BigInt half_turn(int m, int n, int k) {
  if (odd(m) != odd(n) && odd(m - k + 1)) std::swap(m, n);
  if (!odd(k)) {
    if (odd(m) && odd(n)) {
      return hprod((m - k + 1) / 2, (n - k + 1) / 2, k / 2) *
             hprod((m - k + 1) / 2, (n - k + 1) / 2, (k - 2) / 2);
    }
    if (odd(m)) {
      return hprod((m - k + 1) / 2, (n - k + 2) / 2, (k - 2) / 2) *
             hprod((m - k + 1) / 2, (n - k) / 2, k / 2);
    }
    return 0;
  }
  if (odd(m) && odd(n)) {
    return hprod((m - k + 2) / 2, (n - k) / 2, (k - 1) / 2) *
           hprod((m - k) / 2, (n - k + 2) / 2, (k - 1) / 2);
  }
  if (odd(m) != odd(n)) {
    return hprod((m - k + 1) / 2, (n - k + 2) / 2, (k - 1) / 2) *
           hprod((m - k + 1) / 2, (n - k) / 2, (k - 1) / 2);
  }
  BigInt h = hprod((m - k + 1) / 2, (n - k + 1) / 2, (k - 1) / 2);
  return h * h;
}

}  // namespace

BigInt count_symmetry(SymmetryClassTag tag, int m, int n, int k) {
  require_k_in_range(m, n, k);
  if (requires_square(tag) && m != n) {
    throw std::invalid_argument(std::string(to_string(tag)) + " requires a square matrix, got " +
                                std::to_string(m) + "x" + std::to_string(n));
  }
  switch (tag) {
    case SymmetryClassTag::U: return count_iams(m, n, k);
    case SymmetryClassTag::DS: return symmetric_pp(n - k + 1, k);
    case SymmetryClassTag::AS: return transpose_complementary(n, k);
    case SymmetryClassTag::DAS: return diagonal_antidiagonal(n, k);
    case SymmetryClassTag::HTS: return half_turn(m, n, k);
    case SymmetryClassTag::VS:
    case SymmetryClassTag::HS:
    case SymmetryClassTag::VHS:
    case SymmetryClassTag::QTS:
    case SymmetryClassTag::TS:
      return odd(k) ? 1 : 0;
  }
  throw std::logic_error("unhandled symmetry tag");
}

std::pair<bool, bool> check_product_relations(int n, int k) {
  const int order = 2 * k - 1;
  if (order < 2 || order > n) {
    throw std::invalid_argument("product relations need 2 <= 2k-1 <= n");
  }
  using T = SymmetryClassTag;
  const BigInt u = count_symmetry(T::U, n, n, order);
  const BigInt ds = count_symmetry(T::DS, n, n, order);
  const BigInt as = count_symmetry(T::AS, n, n, order);
  const BigInt hts = count_symmetry(T::HTS, n, n, order);
  const BigInt das = count_symmetry(T::DAS, n, n, order);
  return {u == ds * as, hts == das * das};
}

}  // namespace iam
