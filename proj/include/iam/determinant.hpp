#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iam/bigint.hpp"

namespace iam {

/// Square matrix of big integers, 0-based storage with 1-based accessors to
/// match the (i, j) indexing of the determinant formulas.
class IntegerMatrix {
 public:
  explicit IntegerMatrix(int size);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int size() const noexcept { return size_; }
  BigInt& at(int i, int j);
  const BigInt& at(int i, int j) const;

  std::string to_string() const;

 private:
  int size_;
  std::vector<BigInt> entries_;
};

/// Fraction-free (Bareiss) elimination with row pivoting. The empty matrix
/// has determinant 1.
BigInt determinant(const IntegerMatrix& a);

}  // namespace iam
