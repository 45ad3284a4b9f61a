#pragma once

// Matrices, partitions, skew shapes and I_k containment.
//
// Containment of I_k is realized as an increasing chain of ones: rows
// r_1 < ... < r_k and columns c_1 < ... < c_k with M(r_s, c_s) = 1. Only
// the diagonal of the pattern is constrained; off-diagonal entries are free.
// All indices are 1-based, rows counted from the top.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iam {

/// Thrown when an internal consistency check on an object fails, e.g. a
/// bijection applied to an input outside its domain.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense m x n (0,1)-matrix stored as packed bit rows.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols);

  /// Builds from explicit 0/1 rows; all rows must have equal length.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Parses the to_string() form, e.g. "111/101".
  static BinaryMatrix from_string(std::string_view text);
  static BinaryMatrix all_ones(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool at(int i, int j) const;
  void set(int i, int j, bool value);

  std::int64_t ones_count() const noexcept;
  std::vector<std::vector<int>> to_rows() const;

  /// Rows joined by '/', e.g. "111/101".
  std::string to_string() const;

  bool operator==(const BinaryMatrix& other) const noexcept = default;
  /// Dimensions first, then row-major lexicographic order of entries.
  std::strong_ordering operator<=>(const BinaryMatrix& other) const noexcept;

 private:
  std::size_t word_index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i - 1) * words_per_row_ + static_cast<std::size_t>(j - 1) / 64;
  }
  void check_index(int i, int j) const;

  int rows_;
  int cols_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

/// Weakly decreasing list of nonnegative parts. Zero parts are kept: the
/// number of parts is part of the value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// 1-based part access; parts beyond the length read as 0.
  int operator[](int i) const noexcept;
  std::int64_t size() const noexcept;
  /// Side of the largest square contained in the Young diagram.
  int durfee_size() const noexcept;
  /// Drops trailing zero parts.
  Partition trimmed() const;

  std::string to_string() const;
  bool operator==(const Partition& other) const noexcept = default;

 private:
  std::vector<int> parts_;
};

/// Skew shape lambda/mu inside the rectangle rows() x cols(); mu is padded
/// with zeros to the length of lambda.
class SkewShape {
 public:
  SkewShape(Partition lambda, Partition mu);
  static SkewShape rectangle(int rows, int cols);

  const Partition& lambda() const noexcept { return lambda_; }
  const Partition& mu() const noexcept { return mu_; }
  int rows() const noexcept { return lambda_.length(); }
  int cols() const noexcept { return lambda_.empty() ? 0 : lambda_[1]; }

  bool contains(int i, int j) const noexcept;
  std::int64_t cell_count() const noexcept;
  bool is_rectangle() const noexcept;

  std::string to_string() const;
  bool operator==(const SkewShape& other) const noexcept = default;

 private:
  Partition lambda_;
  Partition mu_;
};

/// (0,1)-filling of a skew shape. Values live in an embedding matrix whose
/// cells outside the shape are pinned to 0 and not addressable.
class Filling {
 public:
  explicit Filling(SkewShape shape);
  Filling(SkewShape shape, const BinaryMatrix& values);

  const SkewShape& shape() const noexcept { return shape_; }
  /// Embedding into the bounding rectangle; cells outside the shape are 0.
  const BinaryMatrix& embedding() const noexcept { return values_; }

  bool at(int i, int j) const;
  void set(int i, int j, bool value);

  bool operator==(const Filling& other) const noexcept = default;

 private:
  SkewShape shape_;
  BinaryMatrix values_;
};

/// Longest increasing chain of ones, O(N log N) over the N one-cells.
int longest_increasing_chain(const BinaryMatrix& m);

/// Quadratic dynamic program over the one-cells; kept as a reference.
int longest_increasing_chain_reference(const BinaryMatrix& m);

bool contains_ik(const BinaryMatrix& m, int k);

/// Containment inside a region: every box (r_a, c_b) of the selected k x k
/// grid must belong to the shape. All k^2 boxes are checked explicitly.
bool contains_ik_in_shape(const Filling& f, int k);

/// (k-1)(m+n-k+1); requires 2 <= k <= min(m, n).
std::int64_t max_ones(int m, int n, int k);

/// I_k-avoiding and no zero can be flipped without creating I_k.
bool is_maximal_iam(const BinaryMatrix& m, int k);

/// Same predicate without the ones-count fast path: prefix/suffix chain
/// tables decide every zero flip in O(mn).
bool is_locally_maximal(const BinaryMatrix& m, int k);

/// Shapes accepted by the filling predicates and the filling oracle for a
/// given k: admissible skew shapes, rectangles, and the truncated
/// rectangles of the maximal-staircase product formula.
bool filling_domain_ok(const SkewShape& shape, int k);

bool is_maximal_filling(const Filling& f, int k);

void require_k_in_range(int m, int n, int k);

}  // namespace iam
