#pragma once

// Maximal I_k-avoiding m x n matrices <-> families of k-1 non-intersecting
// lattice paths <-> plane partitions in an (m-k+1) x (n-k+1) x (k-1) box.

#include <functional>
#include <utility>
#include <vector>

#include "iam/bigint.hpp"
#include "iam/core.hpp"
#include "iam/lattice.hpp"

namespace iam {

/// a x b array with entries in [0, c], weakly decreasing along rows and
/// columns. Entries are 1-indexed.
class PlanePartition {
 public:
  PlanePartition(int a, int b, int c);
  PlanePartition(int a, int b, int c, const std::vector<std::vector<int>>& rows);

  int rows() const noexcept { return a_; }
  int cols() const noexcept { return b_; }
  int bound() const noexcept { return c_; }

  int at(int r, int s) const;
  void set(int r, int s, int value);

  /// Throws std::invalid_argument unless bounds and monotonicity hold.
  void validate() const;
  bool is_valid() const noexcept;

  std::int64_t volume() const noexcept;
  std::int64_t trace() const noexcept;
  std::vector<std::vector<int>> to_rows() const;

  bool operator==(const PlanePartition& other) const noexcept = default;
  auto operator<=>(const PlanePartition& other) const noexcept = default;

 private:
  int a_;
  int b_;
  int c_;
  std::vector<int> values_;
};

/// Path s (0-based here, p'_{s+1} in the usual numbering) runs from
/// u_{s+1} to v_{s+1}; path 0 is the bottom-most.
struct PathFamily {
  std::vector<std::vector<LatticePoint>> paths;

  bool operator==(const PathFamily& other) const noexcept = default;
};

PathFamily matrix_to_paths(const BinaryMatrix& m, int k);
BinaryMatrix paths_to_matrix(const PathFamily& paths, int m, int n, int k);

/// Each zero (i, j) with h ones strictly down-right on its diagonal becomes
/// entry (i-k+1+h, j-k+1+h) = h of the plane partition.
PlanePartition matrix_to_pp(const BinaryMatrix& m, int k);
BinaryMatrix pp_to_matrix(const PlanePartition& pp, int m, int n, int k);

/// lambda^1, ..., lambda^c: lambda^s_r = #{ s' : pp(r, s') >= s }, trimmed.
std::vector<Partition> pp_layers(const PlanePartition& pp);

/// Visits every plane partition in the a x b x c box in row-major
/// lexicographic order.
void for_each_plane_partition(int a, int b, int c,
                              const std::function<void(const PlanePartition&)>& visit);
std::vector<PlanePartition> enumerate_plane_partitions(int a, int b, int c);

/// A zigzag path as a list of 1-based matrix cells from south-west to
/// north-east; decompositions list paths from the longest to the shortest.
using ZigzagPath = std::vector<std::pair<int, int>>;
using ZigzagDecomposition = std::vector<ZigzagPath>;

/// Visits every partition of the one-cells into k-1 east/north zigzag
/// paths of lengths m+n-1, m+n-3, ..., m+n-2k+3.
void for_each_zigzag_decomposition(const BinaryMatrix& m, int k,
                                   const std::function<void(const ZigzagDecomposition&)>& visit);
BigInt count_zigzag_decompositions(const BinaryMatrix& m, int k);

}  // namespace iam
