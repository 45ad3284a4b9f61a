#include "iam/genfunc.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "iam/bijection.hpp"
#include "iam/formulas.hpp"
#include "iam/oracle.hpp"

namespace iam {

int stat_v_cell(const BinaryMatrix& mat, int i, int j) {
  if (mat.at(i, j)) throw std::invalid_argument("v is defined on zero entries only");
  int h = 0;
  for (int d = 1; i + d <= mat.rows() && j + d <= mat.cols(); ++d)
    if (mat.at(i + d, j + d)) ++h;
  return h;
}

std::int64_t stat_v(const BinaryMatrix& mat) {
  std::int64_t total = 0;
  for (int i = 1; i <= mat.rows(); ++i)
    for (int j = 1; j <= mat.cols(); ++j)
      if (!mat.at(i, j)) total += stat_v_cell(mat, i, j);
  return total;
}

std::int64_t stat_vd(const BinaryMatrix& mat) {
  std::int64_t total = 0;
  for (int i = 1; i <= std::min(mat.rows(), mat.cols()); ++i)
    if (!mat.at(i, i)) total += stat_v_cell(mat, i, i);
  return total;
}

int stat_w_cell(const BinaryMatrix& mat, int i, int j) {
  if (!mat.at(i, j)) throw std::invalid_argument("w is defined on one entries only");
  int z = 0;
  for (int d = 1; i - d >= 1 && j - d >= 1; ++d)
    if (!mat.at(i - d, j - d)) ++z;
  return z;
}

std::vector<int> stat_d(const BinaryMatrix& mat, int k) {
  const auto family = matrix_to_paths(mat, k);
  const int m = mat.rows();
  std::vector<int> d;
  for (const auto& path : family.paths) {
    int found = -1;
    for (auto pt : path) {
      const int i = m - pt.y;
      const int j = pt.x + 1;
      if (i != j) continue;
      if (found >= 0) throw InvariantViolation("path meets the main diagonal twice");
      found = stat_w_cell(mat, i, j);
    }
    if (found < 0) throw InvariantViolation("path misses the main diagonal");
    d.push_back(found);
  }
  return d;
}

StatRecord stats(const BinaryMatrix& mat, int k) {
  return StatRecord{stat_v(mat), stat_vd(mat), stat_d(mat, k)};
}

Rational weight_from_stats(const StatRecord& s, int k, const Rational& q, const Rational& t) {
  Rational w = pow(q, s.v) * pow(t, s.vd);
  for (int l = 1; l <= k - 1; ++l) {
    const int dl = s.d[static_cast<std::size_t>(l - 1)];
    for (int step = 0; step < dl; ++step) {
      const Rational qp = pow(q, k - l + step);
      const Rational den = 1 - t * qp;
      if (den == 0) throw std::domain_error("vanishing Pochhammer denominator");
      w *= (1 - qp) / den;
    }
  }
  w.canonicalize();
  return w;
}

Rational weight_at(const BinaryMatrix& mat, int k, const Rational& q, const Rational& t) {
  if (!is_maximal_iam(mat, k)) throw std::invalid_argument("weight needs a maximal IAM");
  return weight_from_stats(stats(mat, k), k, q, t);
}

Rational gf_lhs(int m, int n, int k, const Rational& q, const Rational& t) {
  Rational total = 0;
  for_each_maximal_iam(m, n, k, {}, [&](const BinaryMatrix& mat) {
    total += weight_from_stats(stats(mat, k), k, q, t);
    return true;
  });
  total.canonicalize();
  return total;
}

namespace {

// Net exponent multiplicities e -> (#numerator - #denominator) of the box
// product prod (1 - x q^{i+j+l-1}) / (1 - x q^{i+j+l-2}).
std::map<int, int> box_exponents(int a, int b, int c) {
  std::map<int, int> net;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int l = 1; l <= c; ++l) {
        ++net[i + j + l - 1];
        --net[i + j + l - 2];
      }
  return net;
}

}  // namespace

Rational gf_rhs(int m, int n, int k, const Rational& q, const Rational& t) {
  require_k_in_range(m, n, k);
  Rational value = 1;
  for (auto [e, mult] : box_exponents(m - k + 1, n - k + 1, k - 1)) {
    const Rational factor = 1 - t * pow(q, e);
    if (mult < 0 && factor == 0) throw std::domain_error("vanishing product denominator");
    if (mult != 0) value *= pow(factor, mult);
  }
  value.canonicalize();
  return value;
}

QPoly volume_gf_product(int a, int b, int c) {
  QPoly num = QPoly::constant(1);
  QPoly den = QPoly::constant(1);
  for (auto [e, mult] : box_exponents(a, b, c)) {
    for (int r = 0; r < mult; ++r) num *= QPoly::one_minus_q_pow(e);
    for (int r = 0; r < -mult; ++r) den *= QPoly::one_minus_q_pow(e);
  }
  return num.divide_exact(den);
}

BigInt gf_rhs_t1_limit(int m, int n, int k) {
  require_k_in_range(m, n, k);
  const Rational at_one = volume_gf_product(m - k + 1, n - k + 1, k - 1).evaluate(1);
  return at_one.get_num();
}

QPoly volume_gf_oracle(int m, int n, int k) {
  std::vector<BigInt> coeffs;
  for_each_maximal_iam(m, n, k, {}, [&](const BinaryMatrix& mat) {
    const auto v = static_cast<std::size_t>(stat_v(mat));
    if (coeffs.size() <= v) coeffs.resize(v + 1, 0);
    ++coeffs[v];
    return true;
  });
  return QPoly(std::move(coeffs));
}

QPoly volume_gf(int m, int n, int k) {
  require_k_in_range(m, n, k);
  QPoly from_oracle = volume_gf_oracle(m, n, k);
  QPoly from_product = volume_gf_product(m - k + 1, n - k + 1, k - 1);
  if (from_oracle != from_product) {
    throw InvariantViolation("volume generating function mismatch: " + from_oracle.to_string() +
                             " vs " + from_product.to_string());
  }
  return from_oracle;
}

QPoly pp_volume_gf(int a, int b, int c) {
  std::vector<BigInt> coeffs;
  for_each_plane_partition(a, b, c, [&](const PlanePartition& pp) {
    const auto v = static_cast<std::size_t>(pp.volume());
    if (coeffs.size() <= v) coeffs.resize(v + 1, 0);
    ++coeffs[v];
  });
  return QPoly(std::move(coeffs));
}

std::vector<std::pair<Rational, Rational>> sample_gf_points(std::uint64_t seed, int count,
                                                            int max_exponent) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<std::pair<Rational, Rational>> out;
  while (static_cast<int>(out.size()) < count) {
    Rational q(num(rng), den(rng));
    Rational t(num(rng), den(rng));
    q.canonicalize();
    t.canonicalize();
    if (q == 0 || q == 1 || q == -1) continue;
    bool ok = true;
    for (int e = 0; e <= max_exponent && ok; ++e)
      if (t * pow(q, e) == 1) ok = false;
    if (ok) out.emplace_back(q, t);
  }
  return out;
}

}  // namespace iam
