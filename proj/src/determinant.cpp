#include "iam/determinant.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace iam {

IntegerMatrix::IntegerMatrix(int size) : size_(size) {
  if (size < 0) throw std::invalid_argument("matrix size must be nonnegative");
  entries_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), BigInt(0));
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix out(static_cast<int>(rows.size()));
  for (int i = 1; i <= out.size_; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != out.size_) throw std::invalid_argument("matrix is not square");
    for (int j = 1; j <= out.size_; ++j) out.at(i, j) = row[static_cast<std::size_t>(j - 1)];
  }
  return out;
}

BigInt& IntegerMatrix::at(int i, int j) {
  if (i < 1 || i > size_ || j < 1 || j > size_) throw std::out_of_range("IntegerMatrix index");
  return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size_) +
                  static_cast<std::size_t>(j - 1)];
}

const BigInt& IntegerMatrix::at(int i, int j) const {
  return const_cast<IntegerMatrix*>(this)->at(i, j);
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= size_; ++i) {
    os << (i > 1 ? "," : "") << '[';
    for (int j = 1; j <= size_; ++j) os << (j > 1 ? "," : "") << at(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntegerMatrix& input) {
  const int n = input.size();
  if (n == 0) return 1;
  IntegerMatrix a = input;
  BigInt previous = 1;
  int sign = 1;
  for (int p = 1; p <= n; ++p) {
    if (a.at(p, p) == 0) {
      int swap_row = 0;
      for (int r = p + 1; r <= n && swap_row == 0; ++r)
        if (a.at(r, p) != 0) swap_row = r;
      if (swap_row == 0) return 0;
      for (int c = 1; c <= n; ++c) std::swap(a.at(p, c), a.at(swap_row, c));
      sign = -sign;
    }
    for (int i = p + 1; i <= n; ++i) {
      for (int j = p + 1; j <= n; ++j) {
        BigInt v = a.at(p, p) * a.at(i, j) - a.at(i, p) * a.at(p, j);
        // Sylvester's identity guarantees exact division.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a.at(i, j) = std::move(v);
      }
      a.at(i, p) = 0;
    }
    previous = a.at(p, p);
  }
  return sign > 0 ? a.at(n, n) : BigInt(-a.at(n, n));
}

}  // namespace iam
