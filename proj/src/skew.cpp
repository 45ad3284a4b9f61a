#include "iam/skew.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace iam {

std::vector<LatticePoint> iam_start_points(int k) {
  std::vector<LatticePoint> out;
  for (int s = 1; s <= k - 1; ++s) out.push_back({k - s - 1, s - 1});
  return out;
}

std::vector<LatticePoint> iam_end_points(int m, int n, int k) {
  std::vector<LatticePoint> out;
  for (int s = 1; s <= k - 1; ++s) out.push_back({n - s, m - k + s});
  return out;
}

TruncatedRect::TruncatedRect(int m_, int n_, int k_, int t_) : m(m_), n(n_), k(k_), t(t_) {
  if (!(2 <= k && k <= m && m <= n)) {
    throw std::invalid_argument("truncated rectangle needs 2 <= k <= m <= n");
  }
  if (t != m - k && t != m - k + 1) {
    throw std::invalid_argument("t must be m-k or m-k+1, got t=" + std::to_string(t));
  }
}

SkewShape TruncatedRect::shape() const {
  std::vector<int> parts(static_cast<std::size_t>(m - t), n);
  for (int s = 1; s <= t; ++s) parts.push_back(n - s);
  return SkewShape(Partition(parts), Partition(std::vector<int>(parts.size(), 0)));
}

bool validate_skew(const SkewShape& shape, int k) {
  const int m = shape.rows();
  if (k < 2 || m < 1) return false;
  const Partition& lambda = shape.lambda();
  const Partition& mu = shape.mu();
  const int n = lambda[1];
  if (lambda[m] < k) return false;
  int zero_parts = 0;
  for (int i = 1; i <= m; ++i)
    if (mu[i] == 0) ++zero_parts;
  if (zero_parts < k) return false;
  if (lambda[1] - mu[1] < k) return false;
  if (m < k) return false;
  for (int i = 1; i <= k; ++i)
    if (lambda[i] != n) return false;
  return true;
}

bool is_truncated_rect(const SkewShape& shape, int k) {
  const int m = shape.rows();
  const int n = shape.cols();
  if (!(2 <= k && k <= m && m <= n)) return false;
  for (int i = 1; i <= m; ++i)
    if (shape.mu()[i] != 0) return false;
  for (int t : {m - k, m - k + 1}) {
    if (TruncatedRect(m, n, k, t).shape().lambda() == shape.lambda()) return true;
  }
  return false;
}

Partition gamma(const Partition& lambda, int a, int b) {
  if (a < 0 || b < 0 || a + b > lambda.length()) {
    throw std::invalid_argument("gamma: cannot drop " + std::to_string(a) + "+" +
                                std::to_string(b) + " parts from " + lambda.to_string());
  }
  const auto& p = lambda.parts();
  return Partition(std::vector<int>(p.begin() + a, p.end() - b));
}

BigInt kreweras_f(const Partition& lambda, const Partition& mu) {
  const int n = lambda.length();
  if (mu.length() > n) {
    for (int i = n + 1; i <= mu.length(); ++i)
      if (mu[i] != 0) throw std::invalid_argument("kreweras_f: mu has more nonzero parts than lambda");
  }
  for (int i = 1; i <= n; ++i) {
    if (mu[i] > lambda[i]) {
      throw std::invalid_argument("kreweras_f: " + mu.to_string() + " not contained in " +
                                  lambda.to_string());
    }
  }
  IntegerMatrix b(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) b.at(i, j) = binomial(lambda[j] - mu[i] + 1, j - i + 1);
  return determinant(b);
}

SkewShape dual_shape(const SkewShape& shape) {
  const int m = shape.rows();
  if (m < 2) throw std::invalid_argument("dual_shape needs at least two rows");
  std::vector<int> lam;
  std::vector<int> mu;
  for (int i = 1; i <= m - 1; ++i) {
    lam.push_back(shape.lambda()[i + 1] - 1);
    mu.push_back(shape.mu()[i]);
  }
  return SkewShape(Partition(lam), Partition(mu));
}

bool is_edge_connected(const SkewShape& shape) {
  for (int i = 1; i < shape.rows(); ++i)
    if (shape.mu()[i] >= shape.lambda()[i + 1]) return false;
  return shape.rows() > 0;
}

bool admits_path_family(const SkewShape& shape, int k) {
  if (!validate_skew(shape, k) || !is_edge_connected(shape)) return false;
  return count_skew_fillings_lgv(shape, k) > 0;
}

IntegerMatrix skew_filling_matrix(const SkewShape& shape, int k) {
  if (!validate_skew(shape, k)) {
    throw std::invalid_argument("shape " + shape.to_string() + " is not admissible for k=" +
                                std::to_string(k));
  }
  if (!is_edge_connected(shape)) {
    throw std::invalid_argument("shape " + shape.to_string() + " splits into blocks meeting at a corner");
  }
  const SkewShape dual = dual_shape(shape);
  const int rows = dual.rows();
  IntegerMatrix b(k - 1);
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = 1; j <= k - 1; ++j) {
      const int drop_top = k - 1 - j;
      const int drop_bottom = i - 1;
      if (drop_top + drop_bottom > rows) {
        b.at(i, j) = 0;  // end lies strictly below the start
        continue;
      }
      b.at(i, j) = kreweras_f(gamma(dual.lambda(), drop_top, drop_bottom),
                              gamma(dual.mu(), drop_top, drop_bottom));
    }
  }
  return b;
}

BigInt count_skew_fillings(const SkewShape& shape, int k) {
  BigInt det = determinant(skew_filling_matrix(shape, k));
  if (det == 0) {
    throw std::invalid_argument("shape " + shape.to_string() + " is too narrow for " +
                                std::to_string(k - 1) + " non-intersecting paths");
  }
  return det;
}

BigInt count_skew_fillings_lgv(const SkewShape& shape, int k) {
  require_k_in_range(shape.rows(), shape.cols(), k);
  return lgv_count(iam_start_points(k), iam_end_points(shape.rows(), shape.cols(), k),
                   shape_region(shape));
}

BigInt count_truncated_rect(int m, int n, int k, int t) {
  const TruncatedRect rect(m, n, k, t);
  const int delta = rect.delta();
  Rational value = 1;
  for (int i = 1; i <= k - 1; ++i) {
    value *= Rational(factorial(m + n - 2 * k + 2 * i + delta),
                      factorial(m - i) * factorial(n + i - 1 + delta));
  }
  for (int i = 1; i <= k - 2; ++i) value *= factorial(i);
  for (int i = 1; i <= k - 1; ++i)
    for (int j = i; j <= k - 1; ++j) value *= n - m + i + j - 1 + delta;
  value.canonicalize();
  if (value.get_den() != 1) {
    throw InvariantViolation("truncated-rectangle product is not an integer: " + to_string(value));
  }
  return value.get_num();
}

BigInt reflection_count(int m, int n, int k, int t, int i, int j, ReflectionDelta variant) {
  const TruncatedRect rect(m, n, k, t);
  if (i < 1 || i > k - 1 || j < 1 || j > k - 1) {
    throw std::invalid_argument("reflection_count: path indices out of range");
  }
  const int delta = variant == ReflectionDelta::RowBased ? rect.delta() : (t == n - k ? 1 : 0);
  const int a = m + n - 2 * k + 2;
  return binomial(a, m - k - i + j + 1) - binomial(a, m - k - i - j + 2 - delta);
}

IntegerMatrix reflection_matrix(int m, int n, int k, int t, ReflectionDelta variant) {
  IntegerMatrix b(k - 1);
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k - 1; ++j) b.at(i, j) = reflection_count(m, n, k, t, i, j, variant);
  return b;
}

RegionPredicate grid_region(int width, int height) {
  return [width, height](LatticePoint p) {
    return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height;
  };
}

RegionPredicate barrier_region(int m, int n, int t) {
  auto grid = grid_region(n, m);
  const int offset = t - n + 1;
  return [grid, offset](LatticePoint p) { return grid(p) && p.y >= p.x + offset; };
}

RegionPredicate shape_region(const SkewShape& shape) {
  return [shape](LatticePoint p) { return shape.contains(shape.rows() - p.y, p.x + 1); };
}

BigInt count_region_paths(LatticePoint a, LatticePoint b, const RegionPredicate& region) {
  if (b.x < a.x || b.y < a.y) return 0;
  if (!region(a) || !region(b)) return 0;
  const int w = b.x - a.x + 1;
  const int h = b.y - a.y + 1;
  std::vector<BigInt> ways(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), BigInt(0));
  auto at = [w, &ways](int dx, int dy) -> BigInt& {
    return ways[static_cast<std::size_t>(dy) * static_cast<std::size_t>(w) + static_cast<std::size_t>(dx)];
  };
  for (int dy = 0; dy < h; ++dy) {
    for (int dx = 0; dx < w; ++dx) {
      if (!region({a.x + dx, a.y + dy})) continue;
      if (dx == 0 && dy == 0) {
        at(dx, dy) = 1;
        continue;
      }
      BigInt v = 0;
      if (dx > 0) v += at(dx - 1, dy);
      if (dy > 0) v += at(dx, dy - 1);
      at(dx, dy) = v;
    }
  }
  return at(w - 1, h - 1);
}

BigInt lgv_count(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends,
                 const RegionPredicate& region) {
  if (starts.size() != ends.size()) {
    throw std::invalid_argument("lgv_count: start and end lists differ in length");
  }
  const int d = static_cast<int>(starts.size());
  IntegerMatrix b(d);
  // Entries are independent path-count tables.
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      b.at(i, j) = count_region_paths(starts[static_cast<std::size_t>(i - 1)],
                                      ends[static_cast<std::size_t>(j - 1)], region);
  return determinant(b);
}

namespace {

void check_kratt_args(int d, const std::vector<std::int64_t>& l, int c) {
  if (c != 0 && c != 1) throw std::invalid_argument("c must be 0 or 1");
  if (d < 0 || static_cast<int>(l.size()) != d) {
    throw std::invalid_argument("L must have exactly d entries");
  }
}

}  // namespace

BigInt kratt_lhs(int d, std::int64_t a, const std::vector<std::int64_t>& l, int c) {
  check_kratt_args(d, l, c);
  IntegerMatrix b(d);
  for (int i = 1; i <= d; ++i) {
    const std::int64_t li = l[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= d; ++j) b.at(i, j) = binomial(a, j - li) - binomial(a, -j - li + c);
  }
  return determinant(b);
}

Rational kratt_rhs(int d, std::int64_t a, const std::vector<std::int64_t>& l, int c) {
  check_kratt_args(d, l, c);
  Rational value = 1;
  for (int i = 1; i <= d; ++i) {
    const std::int64_t li = l[static_cast<std::size_t>(i - 1)];
    value *= Rational(factorial(a + 2 * i - 1 - c), factorial(d - li) * factorial(a + d - c + li));
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      const std::int64_t li = l[static_cast<std::size_t>(i - 1)];
      const std::int64_t lj = l[static_cast<std::size_t>(j - 1)];
      if (i < j) value *= Rational(BigInt(lj - li));
      value *= Rational(BigInt(li + lj + a - c));
    }
  }
  value.canonicalize();
  return value;
}

}  // namespace iam
