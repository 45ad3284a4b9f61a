#include <doctest.h>

#include <algorithm>
#include <set>

#include "iam/bijection.hpp"
#include "iam/fixtures.hpp"
#include "iam/formulas.hpp"
#include "iam/oracle.hpp"

using namespace iam;

namespace {

ZigzagDecomposition sorted_cells(ZigzagDecomposition d) {
  for (auto& path : d) std::sort(path.begin(), path.end());
  return d;
}

}  // namespace

TEST_CASE("plane partition basics") {
  PlanePartition pp(2, 2, 3, {{3, 1}, {2, 0}});
  CHECK(pp.volume() == 6);
  CHECK(pp.trace() == 3);
  CHECK(pp.is_valid());
  pp.set(2, 2, 2);
  CHECK_FALSE(pp.is_valid());
  CHECK_THROWS_AS(pp.validate(), std::invalid_argument);
  CHECK_THROWS_AS(PlanePartition(1, 2, 1, {{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PlanePartition(1, 2, 2, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("plane partitions in a box are counted by the box product") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        const auto all = enumerate_plane_partitions(a, b, c);
        CHECK(BigInt(static_cast<long>(all.size())) == hprod(a, b, c));
        CHECK(std::is_sorted(all.begin(), all.end()));
      }
}

TEST_CASE("reference 3 x 4 matrices map to their plane partitions") {
  for (const auto& row : fixtures::three_by_four()) {
    const auto mat = BinaryMatrix::from_string(row.matrix);
    const auto pp = matrix_to_pp(mat, 3);
    CHECK(pp.rows() == 1);
    CHECK(pp.cols() == 2);
    CHECK(pp.bound() == 2);
    CHECK(pp.to_rows() == std::vector<std::vector<int>>{{row.pp[0], row.pp[1]}});
    CHECK(pp.volume() == row.v);
    CHECK(pp_to_matrix(pp, 3, 4, 3) == mat);
  }
  CHECK(pp_to_matrix(PlanePartition(1, 2, 2, {{2, 1}}), 3, 4, 3) ==
        BinaryMatrix::from_string("0111/1101/1111"));
  CHECK(pp_to_matrix(PlanePartition(1, 2, 2), 3, 4, 3) == BinaryMatrix::from_string("1111/1111/1100"));
}

TEST_CASE("minimal path family") {
  const auto family = matrix_to_paths(BinaryMatrix::from_string("1111/1111/1100"), 3);
  REQUIRE(family.paths.size() == 2);
  CHECK(family.paths[0].front() == LatticePoint{1, 0});
  CHECK(family.paths[0].back() == LatticePoint{3, 1});
  CHECK(family.paths[1].front() == LatticePoint{0, 1});
  CHECK(family.paths[1].back() == LatticePoint{2, 2});
  CHECK(paths_to_matrix(family, 3, 4, 3) == BinaryMatrix::from_string("1111/1111/1100"));
}

TEST_CASE("9 x 7 example") {
  const auto mat = fixtures::nine_by_seven();
  const auto pp = matrix_to_pp(mat, 5);
  CHECK(pp == fixtures::nine_by_seven_pp());
  CHECK(pp_to_matrix(pp, 9, 7, 5) == mat);
  const auto layers = pp_layers(pp);
  REQUIRE(layers.size() == 4);
  CHECK(layers[0] == Partition({3, 3, 3, 2, 1}));
  CHECK(layers[1] == Partition({3, 3, 2}));
  CHECK(layers[2] == Partition({2, 2, 1}));
  CHECK(layers[3].empty());
  const auto family = matrix_to_paths(mat, 5);
  CHECK(family.paths.size() == 4);
  CHECK(paths_to_matrix(family, 9, 7, 5) == mat);
}

TEST_CASE("layers") {
  const auto flat = pp_layers(PlanePartition(2, 3, 2));
  REQUIRE(flat.size() == 2);
  CHECK(flat[0].empty());
  CHECK(flat[1].empty());
  const auto two_one = pp_layers(PlanePartition(1, 2, 2, {{2, 1}}));
  CHECK(two_one[0] == Partition({2}));
  CHECK(two_one[1] == Partition({1}));
}

TEST_CASE("every plane partition in a box comes from a maximal matrix") {
  for (auto [m, n, k] : {std::tuple{5, 5, 3}, std::tuple{5, 6, 4}, std::tuple{4, 7, 3}, std::tuple{6, 4, 3}}) {
    const auto box = enumerate_plane_partitions(m - k + 1, n - k + 1, k - 1);
    std::set<BinaryMatrix> images;
    for (const auto& pp : box) {
      const auto mat = pp_to_matrix(pp, m, n, k);
      REQUIRE(is_maximal_iam(mat, k));
      REQUIRE(matrix_to_pp(mat, k) == pp);
      images.insert(mat);
    }
    CHECK(images.size() == box.size());
  }
}

TEST_CASE("volume and trace are v and v_d") {
  for (auto [m, n, k] : {std::tuple{4, 5, 3}, std::tuple{5, 4, 3}, std::tuple{5, 5, 2}}) {
    for (const auto& mat : enumerate_maximal_iams(m, n, k)) {
      const auto pp = matrix_to_pp(mat, k);
      std::int64_t v = 0;
      std::int64_t vd = 0;
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
          if (mat.at(i, j)) continue;
          int h = 0;
          for (int d = 1; i + d <= m && j + d <= n; ++d) h += mat.at(i + d, j + d);
          v += h;
          if (i == j) vd += h;
        }
      CHECK(pp.volume() == v);
      CHECK(pp.trace() == vd);
    }
  }
}

TEST_CASE("bijections reject non-maximal input") {
  CHECK_THROWS_AS(matrix_to_pp(BinaryMatrix::from_string("1111/1111/1000"), 3), InvariantViolation);
  CHECK_THROWS_AS(matrix_to_paths(BinaryMatrix::all_ones(3, 4), 3), InvariantViolation);
  PathFamily broken{{{{1, 0}, {2, 0}, {3, 0}, {3, 1}}}};
  CHECK_THROWS(paths_to_matrix(broken, 3, 4, 3));
  CHECK_THROWS(pp_to_matrix(PlanePartition(1, 2, 2), 3, 5, 3));
}

TEST_CASE("zigzag decompositions") {
  for (const auto& row : fixtures::three_by_four())
    CHECK(count_zigzag_decompositions(BinaryMatrix::from_string(row.matrix), 3) == 2);
  for (const auto& mat : enumerate_maximal_iams(4, 5, 2)) CHECK(count_zigzag_decompositions(mat, 2) == 1);

  const auto mat = fixtures::nine_by_seven();
  std::vector<ZigzagDecomposition> all;
  for_each_zigzag_decomposition(mat, 5, [&](const ZigzagDecomposition& d) { all.push_back(sorted_cells(d)); });
  CHECK(all.size() == 24);
  CHECK(count_zigzag_decompositions(mat, 5) == 24);
  for (const auto& path : all.front()) CHECK(!path.empty());
  CHECK(all.front()[0].size() == 15);
  CHECK(all.front()[3].size() == 9);
  for (const auto& drawing : fixtures::nine_by_seven_decompositions()) {
    const auto expected = sorted_cells(fixtures::decomposition_from_drawing(drawing, 4));
    CHECK(std::find(all.begin(), all.end(), expected) != all.end());
  }
}

TEST_CASE("drawn decompositions list cells from south-west to north-east") {
  const auto drawing = fixtures::nine_by_seven_decompositions()[0];
  const auto d = fixtures::decomposition_from_drawing(drawing, 4);
  CHECK(d[0].front() == std::pair{9, 1});
  CHECK(d[0].back() == std::pair{1, 7});
  for (const auto& path : d)
    for (std::size_t s = 1; s < path.size(); ++s) {
      const auto [i0, j0] = path[s - 1];
      const auto [i1, j1] = path[s];
      CHECK(((i1 == i0 - 1 && j1 == j0) || (i1 == i0 && j1 == j0 + 1)));
    }
}
