#pragma once

// Determinant machinery for maximal I_k-avoiding fillings of skew shapes:
// admissibility, row truncation, corner-path determinants, the dual shape,
// the reflection-principle matrix, a general LGV engine, and a closed-form
// determinant evaluation used to cross-check the truncated-rectangle count.

#include <cstdint>
#include <functional>
#include <vector>

#include "iam/bigint.hpp"
#include "iam/core.hpp"
#include "iam/determinant.hpp"
#include "iam/lattice.hpp"

namespace iam {

/// m x n rectangle with a staircase of size t removed at the lower right,
/// for the two maximal sizes t = m-k and t = m-k+1.
struct TruncatedRect {
  int m;
  int n;
  int k;
  int t;

  TruncatedRect(int m, int n, int k, int t);

  /// lambda = (n^(m-t), n-1, ..., n-t), mu empty.
  SkewShape shape() const;
  /// 1 when t = m-k, else 0.
  int delta() const noexcept { return t == m - k ? 1 : 0; }
};

/// The staircase conditions: lambda_m >= k, mu has at least k zero parts,
/// lambda_1 - mu_1 >= k, and the first k parts of lambda equal lambda_1.
bool validate_skew(const SkewShape& shape, int k);

/// True if the shape is some TruncatedRect(m, n, k, t) for this k.
bool is_truncated_rect(const SkewShape& shape, int k);

/// Drops the first a and the last b parts.
Partition gamma(const Partition& lambda, int a, int b);

/// det[C(lambda_j - mu_i + 1, j - i + 1)] over the parts of lambda: the
/// number of lattice paths on the corner grid of lambda/mu from its lower
/// left to its upper right corner.
BigInt kreweras_f(const Partition& lambda, const Partition& mu);

/// Shape whose boxes are the unit faces of the box-adjacency graph of the
/// input: lambda'_i = lambda_{i+1} - 1, mu'_i = mu_i, for i < rows.
SkewShape dual_shape(const SkewShape& shape);

/// Consecutive rows share at least one column: mu_i < lambda_{i+1}.
bool is_edge_connected(const SkewShape& shape);
/// Admissible, edge-connected, and wide enough to carry k-1
/// non-intersecting paths between the two corner staircases. This is the
/// domain on which count_skew_fillings is exact.
bool admits_path_family(const SkewShape& shape, int k);

/// The (k-1) x (k-1) path-count matrix of the skew-shape formula. Entries
/// whose truncation would remove more rows than the dual shape has are 0.
IntegerMatrix skew_filling_matrix(const SkewShape& shape, int k);

/// Number of maximal I_k-avoiding fillings of an admissible skew shape.
/// Throws std::invalid_argument when the shape is disconnected or carries
/// no path family; the determinant would be meaningless there.
BigInt count_skew_fillings(const SkewShape& shape, int k);

/// Non-intersecting path count taken directly on the shape's cells with the
/// canonical IAM endpoints; an independent route to count_skew_fillings.
BigInt count_skew_fillings_lgv(const SkewShape& shape, int k);

/// Product formula for the truncated rectangle.
BigInt count_truncated_rect(int m, int n, int k, int t);

/// Which Kronecker delta the subtracted binomial of the reflection count
/// uses: t = m-k (row based) or t = n-k (column based). They differ only
/// when m != n.
enum class ReflectionDelta { RowBased, ColumnBased };

/// Variant that agrees with the brute-force oracle on every tested size.
inline constexpr ReflectionDelta kPinnedReflectionDelta = ReflectionDelta::RowBased;

/// Paths from u_i to v_j staying weakly above y = x + (t - n + 1).
BigInt reflection_count(int m, int n, int k, int t, int i, int j,
                        ReflectionDelta variant = kPinnedReflectionDelta);

IntegerMatrix reflection_matrix(int m, int n, int k, int t,
                                ReflectionDelta variant = kPinnedReflectionDelta);

using RegionPredicate = std::function<bool(LatticePoint)>;

/// Lattice points of the width x height grid [0, width) x [0, height).
RegionPredicate grid_region(int width, int height);

/// Grid of an m x n matrix restricted to y >= x + (t - n + 1).
RegionPredicate barrier_region(int m, int n, int t);

/// Lattice points whose matrix cell (m - y, x + 1) lies in the shape.
RegionPredicate shape_region(const SkewShape& shape);

/// Number of east/north paths from a to b through region points only.
BigInt count_region_paths(LatticePoint a, LatticePoint b, const RegionPredicate& region);

/// det of B with B_ij = number of region paths from starts[i] to ends[j].
BigInt lgv_count(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends,
                 const RegionPredicate& region);

/// det[C(A, j - L_i) - C(A, -j - L_i + c)]_{i,j=1..d}.
BigInt kratt_lhs(int d, std::int64_t a, const std::vector<std::int64_t>& l, int c);

/// Product side of the same evaluation. Throws std::domain_error when a
/// factorial argument is negative.
Rational kratt_rhs(int d, std::int64_t a, const std::vector<std::int64_t>& l, int c);

}  // namespace iam
