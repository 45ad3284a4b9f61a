#include "iam/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <string_view>

#include "iam/skew.hpp"

namespace iam {

// ---------------------------------------------------------------------------
// BinaryMatrix

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_(0) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("matrix dimensions must be positive, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
  words_per_row_ = (static_cast<std::size_t>(cols) + 63) / 64;
  bits_.assign(words_per_row_ * static_cast<std::size_t>(rows), 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("matrix must have at least one row and one column");
  }
  BinaryMatrix out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 1; i <= out.rows_; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != out.cols_) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int j = 1; j <= out.cols_; ++j) {
      int v = row[static_cast<std::size_t>(j - 1)];
      if (v != 0 && v != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
      out.set(i, j, v == 1);
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::from_string(std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  for (char ch : text) {
    if (ch == '/') {
      rows.emplace_back();
    } else if (ch == '0' || ch == '1') {
      rows.back().push_back(ch - '0');
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch + "' in matrix string");
    }
  }
  return from_rows(rows);
}

BinaryMatrix BinaryMatrix::all_ones(int rows, int cols) {
  BinaryMatrix out(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) out.set(i, j, true);
  return out;
}

void BinaryMatrix::check_index(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

bool BinaryMatrix::at(int i, int j) const {
  check_index(i, j);
  return (bits_[word_index(i, j)] >> ((j - 1) % 64)) & 1U;
}

void BinaryMatrix::set(int i, int j, bool value) {
  check_index(i, j);
  const std::uint64_t mask = std::uint64_t{1} << ((j - 1) % 64);
  auto& word = bits_[word_index(i, j)];
  word = value ? (word | mask) : (word & ~mask);
}

std::int64_t BinaryMatrix::ones_count() const noexcept {
  std::int64_t total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total;
}

std::vector<std::vector<int>> BinaryMatrix::to_rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_),
                                    std::vector<int>(static_cast<std::size_t>(cols_), 0));
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = at(i, j) ? 1 : 0;
  return out;
}

std::string BinaryMatrix::to_string() const {
  std::string out;
  for (int i = 1; i <= rows_; ++i) {
    if (i > 1) out.push_back('/');
    for (int j = 1; j <= cols_; ++j) out.push_back(at(i, j) ? '1' : '0');
  }
  return out;
}

std::strong_ordering BinaryMatrix::operator<=>(const BinaryMatrix& other) const noexcept {
  if (auto c = rows_ <=> other.rows_; c != 0) return c;
  if (auto c = cols_ <=> other.cols_; c != 0) return c;
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) {
      bool a = at(i, j);
      bool b = other.at(i, j);
      if (a != b) return a ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Partition / SkewShape / Filling

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
    }
  }
}

int Partition::operator[](int i) const noexcept {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::int64_t Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

int Partition::durfee_size() const noexcept {
  int d = 0;
  while (d < length() && parts_[static_cast<std::size_t>(d)] >= d + 1) ++d;
  return d;
}

Partition Partition::trimmed() const {
  std::vector<int> p = parts_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

namespace {

Partition pad_mu(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts = mu.parts();
  while (static_cast<int>(parts.size()) > lambda.length()) {
    if (parts.back() != 0) {
      throw std::invalid_argument("mu " + mu.to_string() + " is not contained in lambda " +
                                  lambda.to_string());
    }
    parts.pop_back();
  }
  parts.resize(static_cast<std::size_t>(lambda.length()), 0);
  return Partition(std::move(parts));
}

}  // namespace

SkewShape::SkewShape(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(pad_mu(lambda_, mu)) {
  for (int i = 1; i <= lambda_.length(); ++i) {
    if (mu_[i] > lambda_[i]) {
      throw std::invalid_argument("mu " + mu_.to_string() + " is not contained in lambda " +
                                  lambda_.to_string());
    }
  }
}

SkewShape SkewShape::rectangle(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("rectangle dimensions must be positive");
  return SkewShape(Partition(std::vector<int>(static_cast<std::size_t>(rows), cols)),
                   Partition(std::vector<int>(static_cast<std::size_t>(rows), 0)));
}

bool SkewShape::contains(int i, int j) const noexcept {
  return i >= 1 && i <= rows() && mu_[i] < j && j <= lambda_[i];
}

std::int64_t SkewShape::cell_count() const noexcept { return lambda_.size() - mu_.size(); }

bool SkewShape::is_rectangle() const noexcept {
  if (rows() == 0) return false;
  for (int i = 1; i <= rows(); ++i)
    if (lambda_[i] != lambda_[1] || mu_[i] != 0) return false;
  return lambda_[1] > 0;
}

std::string SkewShape::to_string() const { return lambda_.to_string() + "/" + mu_.to_string(); }

namespace {

BinaryMatrix bounding_matrix(const SkewShape& shape) {
  if (shape.rows() < 1 || shape.cols() < 1) {
    throw std::invalid_argument("shape " + shape.to_string() + " has an empty bounding box");
  }
  return BinaryMatrix(shape.rows(), shape.cols());
}

}  // namespace

Filling::Filling(SkewShape shape) : shape_(std::move(shape)), values_(bounding_matrix(shape_)) {}

Filling::Filling(SkewShape shape, const BinaryMatrix& values)
    : shape_(std::move(shape)), values_(bounding_matrix(shape_)) {
  if (values.rows() != shape_.rows() || values.cols() != shape_.cols()) {
    throw std::invalid_argument("filling values do not match the shape's bounding box");
  }
  for (int i = 1; i <= shape_.rows(); ++i) {
    for (int j = 1; j <= shape_.cols(); ++j) {
      if (!values.at(i, j)) continue;
      if (!shape_.contains(i, j)) {
        throw std::invalid_argument("filling has a one outside the shape at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
      values_.set(i, j, true);
    }
  }
}

bool Filling::at(int i, int j) const {
  if (!shape_.contains(i, j)) throw std::out_of_range("cell outside the shape");
  return values_.at(i, j);
}

void Filling::set(int i, int j, bool value) {
  if (!shape_.contains(i, j)) throw std::out_of_range("cell outside the shape");
  values_.set(i, j, value);
}

// ---------------------------------------------------------------------------
// Chains

int longest_increasing_chain(const BinaryMatrix& m) {
  // Patience sorting on columns. Within a row, columns are fed in decreasing
  // order so two cells of the same row never extend each other.
  std::vector<int> tails;
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = m.cols(); j >= 1; --j) {
      if (!m.at(i, j)) continue;
      auto it = std::lower_bound(tails.begin(), tails.end(), j);
      if (it == tails.end()) {
        tails.push_back(j);
      } else {
        *it = j;
      }
    }
  }
  return static_cast<int>(tails.size());
}

int longest_increasing_chain_reference(const BinaryMatrix& m) {
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (m.at(i, j)) cells.push_back({i, j});
  std::vector<int> best(cells.size(), 1);
  int out = 0;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (cells[b].r < cells[a].r && cells[b].c < cells[a].c) {
        best[a] = std::max(best[a], best[b] + 1);
      }
    }
    out = std::max(out, best[a]);
  }
  return out;
}

namespace {

void require_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
}

}  // namespace

void require_k_in_range(int m, int n, int k) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  if (k < 2 || k > std::min(m, n)) {
    throw std::invalid_argument("k must satisfy 2 <= k <= min(m,n); got m=" + std::to_string(m) +
                                " n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

bool contains_ik(const BinaryMatrix& m, int k) {
  require_k(k);
  return longest_increasing_chain(m) >= k;
}

namespace {

struct InShapeSearch {
  const Filling& f;
  int k;
  std::vector<int> rows;
  std::vector<int> cols;

  bool extend(int last_r, int last_c) {
    if (static_cast<int>(rows.size()) == k) return true;
    const SkewShape& shape = f.shape();
    for (int r = last_r + 1; r <= shape.rows(); ++r) {
      for (int c = last_c + 1; c <= shape.cols(); ++c) {
        if (!shape.contains(r, c) || !f.at(r, c)) continue;
        bool boxes_ok = true;
        for (std::size_t s = 0; s < rows.size() && boxes_ok; ++s) {
          boxes_ok = shape.contains(r, cols[s]) && shape.contains(rows[s], c);
        }
        if (!boxes_ok) continue;
        rows.push_back(r);
        cols.push_back(c);
        if (extend(r, c)) return true;
        rows.pop_back();
        cols.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

bool contains_ik_in_shape(const Filling& f, int k) {
  require_k(k);
  InShapeSearch search{f, k, {}, {}};
  return search.extend(0, 0);
}

std::int64_t max_ones(int m, int n, int k) {
  require_k_in_range(m, n, k);
  return static_cast<std::int64_t>(k - 1) * (m + n - k + 1);
}

bool is_locally_maximal(const BinaryMatrix& mat, int k) {
  const int m = mat.rows();
  const int n = mat.cols();
  const auto w = static_cast<std::size_t>(n + 2);
  std::vector<int> pre(static_cast<std::size_t>(m + 2) * w, 0);
  std::vector<int> suf(static_cast<std::size_t>(m + 2) * w, 0);
  auto idx = [w](int i, int j) { return static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j); };
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      int v = std::max(pre[idx(i - 1, j)], pre[idx(i, j - 1)]);
      if (mat.at(i, j)) v = std::max(v, pre[idx(i - 1, j - 1)] + 1);
      pre[idx(i, j)] = v;
    }
  }
  if (pre[idx(m, n)] >= k) return false;
  for (int i = m; i >= 1; --i) {
    for (int j = n; j >= 1; --j) {
      int v = std::max(suf[idx(i + 1, j)], suf[idx(i, j + 1)]);
      if (mat.at(i, j)) v = std::max(v, suf[idx(i + 1, j + 1)] + 1);
      suf[idx(i, j)] = v;
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (mat.at(i, j)) continue;
      if (pre[idx(i - 1, j - 1)] + 1 + suf[idx(i + 1, j + 1)] < k) return false;
    }
  }
  return true;
}

bool is_maximal_iam(const BinaryMatrix& m, int k) {
  require_k_in_range(m.rows(), m.cols(), k);
  const std::int64_t ones = m.ones_count();
  const std::int64_t cap = max_ones(m.rows(), m.cols(), k);
  if (ones > cap) return false;
  if (ones == cap) return !contains_ik(m, k);
  return is_locally_maximal(m, k);
}

bool filling_domain_ok(const SkewShape& shape, int k) {
  if (k < 2 || shape.rows() < 1 || shape.cols() < 1) return false;
  return shape.is_rectangle() || validate_skew(shape, k) || is_truncated_rect(shape, k);
}

bool is_maximal_filling(const Filling& f, int k) {
  require_k(k);
  if (!filling_domain_ok(f.shape(), k)) {
    throw std::invalid_argument("shape " + f.shape().to_string() +
                                " is not admissible for k=" + std::to_string(k));
  }
  if (contains_ik_in_shape(f, k)) return false;
  Filling probe = f;
  const SkewShape& shape = f.shape();
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = shape.mu()[i] + 1; j <= shape.lambda()[i]; ++j) {
      if (f.at(i, j)) continue;
      probe.set(i, j, true);
      bool creates = contains_ik_in_shape(probe, k);
      probe.set(i, j, false);
      if (!creates) return false;
    }
  }
  return true;
}

}  // namespace iam
