#include <doctest.h>

#include "iam/bijection.hpp"
#include "iam/fixtures.hpp"
#include "iam/formulas.hpp"
#include "iam/genfunc.hpp"
#include "iam/oracle.hpp"

using namespace iam;

TEST_CASE("reference statistics") {
  for (const auto& row : fixtures::three_by_four()) {
    const auto mat = BinaryMatrix::from_string(row.matrix);
    CAPTURE(row.matrix);
    CHECK(stat_v(mat) == row.v);
    CHECK(stat_vd(mat) == row.vd);
    CHECK(stat_d(mat, 3) == std::vector<int>{row.d1, row.d2});
  }
  CHECK(stat_v(BinaryMatrix::all_ones(3, 4)) == 0);
  CHECK(stat_vd(BinaryMatrix::from_string("1111/1111/1100")) == 0);
  CHECK_THROWS_AS(stat_v_cell(BinaryMatrix::all_ones(2, 2), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(stat_w_cell(BinaryMatrix(2, 2), 1, 1), std::invalid_argument);
}

TEST_CASE("reference weights") {
  const Rational q(2, 3);
  const Rational t(-5, 7);
  const auto rows = fixtures::three_by_four();
  CHECK(weight_at(BinaryMatrix::from_string(rows[0].matrix), 3, q, t) == 1);
  for (const auto& row : rows) {
    Rational expected = pow(q, row.v) * pow(t, row.vd);
    if (row.d1) expected *= (1 - q * q) / (1 - t * q * q);
    if (row.d2) expected *= (1 - q) / (1 - t * q);
    CHECK(weight_at(BinaryMatrix::from_string(row.matrix), 3, q, t) == expected);
  }
  // Denominator 1 - t q^2 vanishes at q = 2, t = 1/4.
  CHECK_THROWS_AS(weight_at(BinaryMatrix::from_string("1111/1011/1110"), 3, 2, Rational(1, 4)),
                  std::domain_error);
  CHECK_THROWS_AS(weight_at(BinaryMatrix::all_ones(3, 4), 3, q, t), std::invalid_argument);
}

TEST_CASE("diagonal statistics are layer Durfee sizes") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int k = 2; k <= std::min(m, n); ++k)
        for (const auto& mat : enumerate_maximal_iams(m, n, k)) {
          const auto layers = pp_layers(matrix_to_pp(mat, k));
          const auto d = stat_d(mat, k);
          REQUIRE(d.size() == layers.size());
          for (std::size_t j = 0; j < d.size(); ++j) CHECK(d[j] == layers[j].durfee_size());
        }
}

TEST_CASE("generating function identity") {
  for (auto [m, n, k] : {std::tuple{2, 2, 2}, std::tuple{3, 4, 3}, std::tuple{4, 3, 3}, std::tuple{4, 4, 3},
                         std::tuple{3, 5, 2}}) {
    for (const auto& [q, t] : sample_gf_points(99, 6, m + n + 2)) CHECK(gf_lhs(m, n, k, q, t) == gf_rhs(m, n, k, q, t));
  }
  for (const auto& [q, t] : sample_gf_points(7, 10, 9)) {
    const Rational closed = (1 - t * pow(q, 3)) * (1 - t * pow(q, 4)) / ((1 - t * q) * (1 - t * q * q));
    CHECK(gf_rhs(3, 4, 3, q, t) == closed);
  }
}

TEST_CASE("t = 1 limit is the box count") {
  CHECK(gf_rhs_t1_limit(9, 7, 5) == 116424);
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n)
      for (int k = 2; k <= std::min(m, n); ++k) CHECK(gf_rhs_t1_limit(m, n, k) == count_iams(m, n, k));
}

TEST_CASE("volume polynomials") {
  CHECK(volume_gf(3, 4, 3).to_csv() == "1,1,2,1,1");
  CHECK(volume_gf_product(1, 2, 2).to_string() == "1 + q + 2q^2 + q^3 + q^4");
  CHECK(volume_gf_product(0, 3, 3) == QPoly::constant(1));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const auto p = volume_gf_product(a, b, c);
        CHECK(p == pp_volume_gf(a, b, c));
        CHECK(p.evaluate(1) == Rational(hprod(a, b, c)));
        CHECK(p.degree() == a * b * c);
      }
}

TEST_CASE("sample points avoid the poles") {
  const auto pts = sample_gf_points(1, 200, 12);
  CHECK(pts.size() == 200);
  for (const auto& [q, t] : pts) {
    CHECK(q != 0);
    CHECK(q != 1);
    CHECK(q != -1);
    for (int e = 0; e <= 12; ++e) CHECK(t * pow(q, e) != 1);
  }
  CHECK(sample_gf_points(1, 20, 12) == std::vector(pts.begin(), pts.begin() + 20));
}
