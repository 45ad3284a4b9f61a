#include <doctest.h>

#include <algorithm>

#include "iam/fixtures.hpp"
#include "iam/formulas.hpp"
#include "iam/oracle.hpp"
#include "iam/skew.hpp"

using namespace iam;

TEST_CASE("oracle examples") {
  CHECK(oracle_count(3, 4, 3) == 6);
  CHECK(oracle_count(2, 2, 2) == 2);
  for (int k = 2; k <= 5; ++k) CHECK(oracle_count(k, k, k) == k);
  const SkewShape s(Partition({3, 3, 2}), Partition({0, 0, 0}));
  CHECK(oracle_count_shape(s, 2) == 5);
  CHECK(enumerate_maximal_fillings(SkewShape::rectangle(1, 4), 2).size() == 1);
}

TEST_CASE("pruned search equals the prune-free scan") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; m * n <= 16; ++n)
      for (int k = 2; k <= std::min(m, n); ++k) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        auto naive = naive_enumerate(m, n, k);
        std::sort(naive.begin(), naive.end());
        CHECK(enumerate_maximal_iams_serial(m, n, k) == naive);
      }
}

TEST_CASE("parallel search returns the serial results in the same order") {
  for (auto [m, n, k] : {std::tuple{4, 5, 3}, std::tuple{5, 5, 3}, std::tuple{5, 6, 4}, std::tuple{6, 6, 3}}) {
    CAPTURE(m);
    CAPTURE(n);
    const auto serial = enumerate_maximal_iams_serial(m, n, k);
    CHECK(enumerate_maximal_iams(m, n, k) == serial);
    CHECK(oracle_count(m, n, k) == oracle_count_serial(m, n, k));
    CHECK(std::is_sorted(serial.begin(), serial.end()));
  }
  EnumerationBudget unordered;
  unordered.deterministic_order = false;
  auto any_order = enumerate_maximal_iams(5, 5, 3, unordered);
  std::sort(any_order.begin(), any_order.end());
  CHECK(any_order == enumerate_maximal_iams_serial(5, 5, 3));
}

TEST_CASE("streaming visitor sees the same sequence and can stop early") {
  std::vector<BinaryMatrix> seen;
  for_each_maximal_iam(4, 4, 3, {}, [&](const BinaryMatrix& mat) {
    seen.push_back(mat);
    return true;
  });
  CHECK(seen == enumerate_maximal_iams(4, 4, 3));
  int visits = 0;
  for_each_maximal_iam(4, 4, 3, {}, [&](const BinaryMatrix&) { return ++visits < 3; });
  CHECK(visits == 3);
}

TEST_CASE("budget") {
  EnumerationBudget small;
  small.max_cells = 12;
  CHECK_NOTHROW(oracle_count(3, 4, 3, small));
  CHECK_THROWS_AS(oracle_count(4, 4, 3, small), BudgetExceeded);
  EnumerationBudget few;
  few.max_results = 4;
  CHECK(enumerate_maximal_iams(5, 5, 3, few).size() == 4);
  const auto all = enumerate_maximal_iams(5, 5, 3);
  CHECK(enumerate_maximal_iams(5, 5, 3, few) == std::vector<BinaryMatrix>(all.begin(), all.begin() + 4));
  CHECK_THROWS_AS(naive_enumerate(4, 5, 3), BudgetExceeded);
}

TEST_CASE("rectangle fillings are the maximal matrices") {
  std::vector<BinaryMatrix> from_fillings;
  for (const auto& f : enumerate_maximal_fillings(SkewShape::rectangle(3, 4), 3))
    from_fillings.push_back(f.embedding());
  std::sort(from_fillings.begin(), from_fillings.end());
  CHECK(from_fillings == enumerate_maximal_iams(3, 4, 3));
}

TEST_CASE("filling search equals the prune-free filling scan") {
  std::vector<std::pair<SkewShape, int>> shapes;
  for (const auto& entry : fixtures::skew_catalog())
    if (entry.first.cell_count() <= 16) shapes.push_back(entry);
  shapes.emplace_back(TruncatedRect(3, 3, 2, 1).shape(), 2);
  shapes.emplace_back(TruncatedRect(4, 4, 3, 2).shape(), 3);
  shapes.emplace_back(TruncatedRect(3, 5, 2, 2).shape(), 2);
  shapes.emplace_back(SkewShape::rectangle(4, 4), 3);
  REQUIRE(shapes.size() >= 8);
  for (const auto& [shape, k] : shapes) {
    CAPTURE(shape.to_string());
    CAPTURE(k);
    const auto pruned = enumerate_maximal_fillings_serial(shape, k);
    const auto naive = naive_enumerate_fillings(shape, k);
    CHECK(pruned.size() == naive.size());
    for (const auto& f : pruned) {
      CHECK(is_maximal_filling(f, k));
      CHECK(std::find(naive.begin(), naive.end(), f) != naive.end());
    }
    CHECK(enumerate_maximal_fillings(shape, k) == pruned);
  }
}
