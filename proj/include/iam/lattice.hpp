#pragma once

#include <compare>
#include <vector>

namespace iam {

/// Point of the square lattice. Matrix entry (i, j) of an m x n matrix sits
/// at (j - 1, m - i), so entry (m, 1) is the origin and steps go east/north.
struct LatticePoint {
  int x = 0;
  int y = 0;

  auto operator<=>(const LatticePoint&) const = default;
};

inline LatticePoint cell_to_point(int m, int i, int j) { return {j - 1, m - i}; }

/// Starts u_s = (k-s-1, s-1), s = 1..k-1, of the path family of an IAM.
std::vector<LatticePoint> iam_start_points(int k);

/// Ends v_s = (n-s, m-k+s), s = 1..k-1.
std::vector<LatticePoint> iam_end_points(int m, int n, int k);

}  // namespace iam
