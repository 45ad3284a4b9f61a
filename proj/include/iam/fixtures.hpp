#pragma once

// Worked examples with known answers, shared by the acceptance runner and
// the unit tests.

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "iam/bijection.hpp"
#include "iam/core.hpp"

namespace iam::fixtures {

struct KnownStats {
  std::string_view matrix;
  int v;
  int vd;
  int d1;
  int d2;
  std::array<int, 2> pp;
};

/// The six maximal I_3-avoiding 3 x 4 matrices with their statistics and
/// plane-partition images, in order of increasing v.
std::span<const KnownStats> three_by_four();

/// A maximal I_5-avoiding 9 x 7 matrix, its plane partition in the
/// 5 x 3 x 4 box, and two of its zigzag decompositions.
BinaryMatrix nine_by_seven();
PlanePartition nine_by_seven_pp();
/// Each decomposition is drawn as a 9 x 7 grid: 'a'..'d' label the paths from
/// the longest down, '.' marks a zero.
std::array<std::array<std::string_view, 9>, 2> nine_by_seven_decompositions();
ZigzagDecomposition decomposition_from_drawing(std::span<const std::string_view> drawing, int paths);

/// A maximal I_5-avoiding 9 x 12 matrix fixed by both flips.
BinaryMatrix nine_by_twelve_symmetric();

/// Admissible skew shapes of at most 20 cells with the k they are used with.
std::vector<std::pair<SkewShape, int>> skew_catalog();

}  // namespace iam::fixtures
