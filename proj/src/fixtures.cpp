#include "iam/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace iam::fixtures {

namespace {

constexpr std::array<KnownStats, 6> kThreeByFour = {{
    {"1111/1111/1100", 0, 0, 0, 0, {0, 0}},
    {"1111/1011/1110", 1, 1, 1, 0, {1, 0}},
    {"1111/1001/1111", 2, 1, 1, 0, {1, 1}},
    {"0111/1111/1110", 2, 2, 1, 1, {2, 0}},
    {"0111/1101/1111", 3, 2, 1, 1, {2, 1}},
    {"0011/1111/1111", 4, 2, 1, 1, {2, 2}},
}};

struct CatalogEntry {
  std::array<int, 5> lambda;
  std::array<int, 5> mu;
  int rows;
  int k;
};

// Kept in sync with data/skew_catalog.jsonl (checked by a unit test).
constexpr std::array<CatalogEntry, 25> kCatalog = {{
    {{3, 3, 2}, {0, 0, 0}, 3, 2},
    {{4, 4, 3}, {0, 0, 0}, 3, 2},
    {{4, 4, 4, 2}, {0, 0, 0, 0}, 4, 2},
    {{5, 5, 3, 3}, {1, 0, 0, 0}, 4, 2},
    {{4, 4, 2}, {1, 0, 0}, 3, 2},
    {{3, 3, 3}, {1, 0, 0}, 3, 2},
    {{5, 5, 4, 2}, {2, 1, 0, 0}, 4, 2},
    {{6, 6, 4}, {3, 0, 0}, 3, 2},
    {{4, 4, 4, 4}, {2, 1, 0, 0}, 4, 2},
    {{5, 5, 5, 2}, {3, 2, 0, 0}, 4, 2},
    {{6, 6, 3, 3}, {4, 1, 0, 0}, 4, 2},
    {{3, 3, 2, 2, 2}, {1, 0, 0, 0, 0}, 5, 2},
    {{4, 4, 4}, {0, 0, 0}, 3, 3},
    {{5, 5, 5, 4}, {0, 0, 0, 0}, 4, 3},
    {{4, 4, 4, 3}, {0, 0, 0, 0}, 4, 3},
    {{5, 5, 5, 3}, {1, 0, 0, 0}, 4, 3},
    {{4, 4, 4, 4}, {1, 0, 0, 0}, 4, 3},
    {{5, 5, 5, 3}, {2, 0, 0, 0}, 4, 3},
    {{6, 6, 6, 3}, {2, 0, 0, 0}, 4, 3},
    {{5, 5, 5, 4, 3}, {2, 1, 0, 0, 0}, 5, 3},
    {{4, 4, 4, 3, 3}, {1, 0, 0, 0, 0}, 5, 3},
    {{5, 5, 5, 3, 3}, {2, 1, 0, 0, 0}, 5, 3},
    {{6, 6, 6, 3}, {3, 0, 0, 0}, 4, 3},
    {{4, 4, 4, 4, 3}, {1, 1, 0, 0, 0}, 5, 3},
    {{5, 5, 5, 5}, {2, 0, 0, 0}, 4, 3},
}};

}  // namespace

std::span<const KnownStats> three_by_four() { return kThreeByFour; }

BinaryMatrix nine_by_seven() {
  return BinaryMatrix::from_string(
      "1111111/1001111/1001011/1011011/1110111/1111101/1110011/1110110/1111100");
}

PlanePartition nine_by_seven_pp() {
  return PlanePartition(5, 3, 4, {{3, 3, 2}, {3, 3, 2}, {3, 2, 1}, {1, 1, 0}, {1, 0, 0}});
}

std::array<std::array<std::string_view, 9>, 2> nine_by_seven_decompositions() {
  return {{
      {"aaaaaaa", "a..bbbb", "a..b.cc", "a.bb.cd", "abb.ccd", "abccc.d", "abc..dd", "abc.dd.",
       "abcdd.."},
      {"aaaaaaa", "a..cccb", "a..c.db", "a.cc.db", "acc.ddb", "acddd.b", "acd..bb", "acd.bb.",
       "abbbb.."},
  }};
}

ZigzagDecomposition decomposition_from_drawing(std::span<const std::string_view> drawing, int paths) {
  ZigzagDecomposition out(static_cast<std::size_t>(paths));
  const int m = static_cast<int>(drawing.size());
  // South-west to north-east: by anti-diagonal level, then upward.
  for (int level = 0; level < 64; ++level) {
    for (int i = m; i >= 1; --i) {
      const auto& row = drawing[static_cast<std::size_t>(i - 1)];
      const int j = level - (m - i) + 1;
      if (j < 1 || j > static_cast<int>(row.size())) continue;
      const char ch = row[static_cast<std::size_t>(j - 1)];
      if (ch == '.') continue;
      const int p = ch - 'a';
      if (p < 0 || p >= paths) throw std::invalid_argument("bad path label in drawing");
      out[static_cast<std::size_t>(p)].emplace_back(i, j);
    }
  }
  return out;
}

BinaryMatrix nine_by_twelve_symmetric() {
  return BinaryMatrix::from_string(
      "111111111111/111111111111/110000000011/110000000011/110000000011/"
      "110000000011/110000000011/111111111111/111111111111");
}

std::vector<std::pair<SkewShape, int>> skew_catalog() {
  std::vector<std::pair<SkewShape, int>> out;
  for (const auto& e : kCatalog) {
    std::vector<int> lambda(e.lambda.begin(), e.lambda.begin() + e.rows);
    std::vector<int> mu(e.mu.begin(), e.mu.begin() + e.rows);
    out.emplace_back(SkewShape(Partition(lambda), Partition(mu)), e.k);
  }
  return out;
}

}  // namespace iam::fixtures
