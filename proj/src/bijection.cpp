#include "iam/bijection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace iam {

// ---------------------------------------------------------------------------
// PlanePartition

PlanePartition::PlanePartition(int a, int b, int c) : a_(a), b_(b), c_(c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("plane partition box must be nonnegative");
  values_.assign(static_cast<std::size_t>(a) * static_cast<std::size_t>(b), 0);
}

PlanePartition::PlanePartition(int a, int b, int c, const std::vector<std::vector<int>>& rows)
    : PlanePartition(a, b, c) {
  if (static_cast<int>(rows.size()) != a) throw std::invalid_argument("plane partition row count mismatch");
  for (int r = 1; r <= a; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r - 1)];
    if (static_cast<int>(row.size()) != b) throw std::invalid_argument("plane partition column count mismatch");
    for (int s = 1; s <= b; ++s) set(r, s, row[static_cast<std::size_t>(s - 1)]);
  }
  validate();
}

int PlanePartition::at(int r, int s) const {
  if (r < 1 || r > a_ || s < 1 || s > b_) throw std::out_of_range("plane partition index");
  return values_[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(b_) +
                 static_cast<std::size_t>(s - 1)];
}

void PlanePartition::set(int r, int s, int value) {
  if (r < 1 || r > a_ || s < 1 || s > b_) throw std::out_of_range("plane partition index");
  values_[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(b_) +
          static_cast<std::size_t>(s - 1)] = value;
}

bool PlanePartition::is_valid() const noexcept {
  for (int r = 1; r <= a_; ++r) {
    for (int s = 1; s <= b_; ++s) {
      const int v = at(r, s);
      if (v < 0 || v > c_) return false;
      if (r > 1 && at(r - 1, s) < v) return false;
      if (s > 1 && at(r, s - 1) < v) return false;
    }
  }
  return true;
}

void PlanePartition::validate() const {
  if (!is_valid()) throw std::invalid_argument("array is not a plane partition in its box");
}

std::int64_t PlanePartition::volume() const noexcept {
  std::int64_t total = 0;
  for (int v : values_) total += v;
  return total;
}

std::int64_t PlanePartition::trace() const noexcept {
  std::int64_t total = 0;
  for (int r = 1; r <= std::min(a_, b_); ++r) total += at(r, r);
  return total;
}

std::vector<std::vector<int>> PlanePartition::to_rows() const {
  std::vector<std::vector<int>> out;
  for (int r = 1; r <= a_; ++r) {
    std::vector<int> row;
    for (int s = 1; s <= b_; ++s) row.push_back(at(r, s));
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix <-> paths

namespace {

void require_maximal(const BinaryMatrix& m, int k) {
  if (!is_maximal_iam(m, k)) {
    throw InvariantViolation("matrix " + m.to_string() + " is not a maximal I_" +
                             std::to_string(k) + "-avoiding matrix");
  }
}

bool unit_step(LatticePoint a, LatticePoint b) {
  return (b.x == a.x + 1 && b.y == a.y) || (b.x == a.x && b.y == a.y + 1);
}

}  // namespace

PathFamily matrix_to_paths(const BinaryMatrix& mat, int k) {
  require_maximal(mat, k);
  const int m = mat.rows();
  const int n = mat.cols();
  PathFamily family;
  family.paths.assign(static_cast<std::size_t>(k - 1), {});
  for (int level = k - 2; level <= m + n - k; ++level) {
    std::vector<LatticePoint> on_level;
    for (int y = 0; y <= m - 1; ++y) {
      const int x = level - y;
      if (x < 0 || x > n - 1) continue;
      if (mat.at(m - y, x + 1)) on_level.push_back({x, y});
    }
    if (static_cast<int>(on_level.size()) != k - 1) {
      throw InvariantViolation("level " + std::to_string(level) + " holds " +
                               std::to_string(on_level.size()) + " path cells, expected " +
                               std::to_string(k - 1));
    }
    for (int s = 0; s < k - 1; ++s) family.paths[static_cast<std::size_t>(s)].push_back(on_level[static_cast<std::size_t>(s)]);
  }
  const auto starts = iam_start_points(k);
  const auto ends = iam_end_points(m, n, k);
  for (std::size_t s = 0; s < family.paths.size(); ++s) {
    const auto& path = family.paths[s];
    if (path.front() != starts[s] || path.back() != ends[s]) {
      throw InvariantViolation("path " + std::to_string(s + 1) + " has the wrong endpoints");
    }
    for (std::size_t p = 1; p < path.size(); ++p) {
      if (!unit_step(path[p - 1], path[p])) {
        throw InvariantViolation("path " + std::to_string(s + 1) + " is not an east/north path");
      }
    }
  }
  return family;
}

BinaryMatrix paths_to_matrix(const PathFamily& family, int m, int n, int k) {
  require_k_in_range(m, n, k);
  if (static_cast<int>(family.paths.size()) != k - 1) {
    throw std::invalid_argument("expected " + std::to_string(k - 1) + " paths");
  }
  const auto starts = iam_start_points(k);
  const auto ends = iam_end_points(m, n, k);
  std::set<LatticePoint> seen;
  BinaryMatrix out(m, n);
  for (std::size_t s = 0; s < family.paths.size(); ++s) {
    const auto& path = family.paths[s];
    if (path.empty() || path.front() != starts[s] || path.back() != ends[s]) {
      throw std::invalid_argument("path " + std::to_string(s + 1) + " is not anchored at u_" +
                                  std::to_string(s + 1) + " and v_" + std::to_string(s + 1));
    }
    for (std::size_t p = 0; p < path.size(); ++p) {
      const auto pt = path[p];
      if (p > 0 && !unit_step(path[p - 1], pt)) {
        throw std::invalid_argument("path " + std::to_string(s + 1) + " takes a non-unit step");
      }
      if (pt.x < 0 || pt.x > n - 1 || pt.y < 0 || pt.y > m - 1) {
        throw std::invalid_argument("path point outside the lattice");
      }
      if (!seen.insert(pt).second) throw std::invalid_argument("paths intersect");
      out.set(m - pt.y, pt.x + 1, true);
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto pt = cell_to_point(m, i, j);
      const int level = pt.x + pt.y;
      if (level < k - 2 || level > m + n - k) out.set(i, j, true);
    }
  }
  if (!is_maximal_iam(out, k)) throw InvariantViolation("paths produced a non-maximal matrix");
  return out;
}

// ---------------------------------------------------------------------------
// Matrix <-> plane partition

namespace {

int ones_down_right(const BinaryMatrix& mat, int i, int j) {
  int h = 0;
  for (int d = 1; i + d <= mat.rows() && j + d <= mat.cols(); ++d)
    if (mat.at(i + d, j + d)) ++h;
  return h;
}

}  // namespace

PlanePartition matrix_to_pp(const BinaryMatrix& mat, int k) {
  require_maximal(mat, k);
  const int m = mat.rows();
  const int n = mat.cols();
  PlanePartition pp(m - k + 1, n - k + 1, k - 1);
  std::vector<char> assigned(static_cast<std::size_t>(pp.rows()) * static_cast<std::size_t>(pp.cols()), 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (mat.at(i, j)) continue;
      const int h = ones_down_right(mat, i, j);
      const int r = i - (k - 1) + h;
      const int s = j - (k - 1) + h;
      if (r < 1 || r > pp.rows() || s < 1 || s > pp.cols()) {
        throw InvariantViolation("zero at (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") maps outside the plane partition");
      }
      auto& flag = assigned[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(pp.cols()) +
                            static_cast<std::size_t>(s - 1)];
      if (flag) throw InvariantViolation("two zeros map to the same plane partition entry");
      flag = 1;
      pp.set(r, s, h);
    }
  }
  if (std::find(assigned.begin(), assigned.end(), 0) != assigned.end()) {
    throw InvariantViolation("plane partition entry left unassigned");
  }
  if (!pp.is_valid()) throw InvariantViolation("image array is not weakly decreasing");
  return pp;
}

BinaryMatrix pp_to_matrix(const PlanePartition& pp, int m, int n, int k) {
  require_k_in_range(m, n, k);
  if (pp.rows() != m - k + 1 || pp.cols() != n - k + 1) {
    throw std::invalid_argument("plane partition must be (m-k+1) x (n-k+1)");
  }
  pp.validate();
  BinaryMatrix out = BinaryMatrix::all_ones(m, n);
  for (int r = 1; r <= pp.rows(); ++r) {
    for (int s = 1; s <= pp.cols(); ++s) {
      const int h = pp.at(r, s);
      if (h > k - 1) throw std::invalid_argument("plane partition entry exceeds k-1");
      const int i = k - 1 + r - h;
      const int j = k - 1 + s - h;
      if (i < 1 || i > m || j < 1 || j > n) throw InvariantViolation("zero position out of bounds");
      if (!out.at(i, j)) throw InvariantViolation("two entries map to the same zero");
      out.set(i, j, false);
    }
  }
  if (!is_maximal_iam(out, k)) throw InvariantViolation("plane partition produced a non-maximal matrix");
  return out;
}

std::vector<Partition> pp_layers(const PlanePartition& pp) {
  std::vector<Partition> layers;
  for (int level = 1; level <= pp.bound(); ++level) {
    std::vector<int> parts;
    for (int r = 1; r <= pp.rows(); ++r) {
      int count = 0;
      for (int s = 1; s <= pp.cols(); ++s)
        if (pp.at(r, s) >= level) ++count;
      if (count == 0) break;
      parts.push_back(count);
    }
    layers.emplace_back(std::move(parts));
  }
  return layers;
}

void for_each_plane_partition(int a, int b, int c,
                              const std::function<void(const PlanePartition&)>& visit) {
  PlanePartition pp(a, b, c);
  const int cells = a * b;
  std::function<void(int)> fill = [&](int pos) {
    if (pos == cells) {
      visit(pp);
      return;
    }
    const int r = pos / b + 1;
    const int s = pos % b + 1;
    int cap = c;
    if (r > 1) cap = std::min(cap, pp.at(r - 1, s));
    if (s > 1) cap = std::min(cap, pp.at(r, s - 1));
    for (int v = 0; v <= cap; ++v) {
      pp.set(r, s, v);
      fill(pos + 1);
    }
  };
  fill(0);
}

std::vector<PlanePartition> enumerate_plane_partitions(int a, int b, int c) {
  std::vector<PlanePartition> out;
  for_each_plane_partition(a, b, c, [&](const PlanePartition& pp) { out.push_back(pp); });
  return out;
}

// ---------------------------------------------------------------------------
// Zigzag decompositions

namespace {

class ZigzagSearch {
 public:
  ZigzagSearch(const BinaryMatrix& mat, int k,
               const std::function<void(const ZigzagDecomposition&)>& visit)
      : mat_(mat), k_(k), visit_(visit) {
    const int m = mat.rows();
    const int n = mat.cols();
    levels_.resize(static_cast<std::size_t>(m + n - 1));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        if (mat.at(i, j)) {
          const auto pt = cell_to_point(m, i, j);
          levels_[static_cast<std::size_t>(pt.x + pt.y)].push_back(pt);
        }
    for (auto& level : levels_)
      std::sort(level.begin(), level.end(), [](LatticePoint p, LatticePoint q) { return p.y < q.y; });
    for (int s = 1; s <= k - 1; ++s) targets_.push_back(m + n - (2 * s - 1));
    used_.assign(targets_.size(), false);
  }

  void run() { enter_level(0); }
  const BigInt& count() const { return count_; }

 private:
  struct Path {
    std::vector<LatticePoint> cells;
    bool open = true;
  };

  int target_slot(int length) const {
    for (std::size_t t = 0; t < targets_.size(); ++t)
      if (targets_[t] == length && !used_[t]) return static_cast<int>(t);
    return -1;
  }

  // Closes paths not extended on the previous level, then assigns the cells
  // of `level`.
  void enter_level(int level) {
    std::vector<std::pair<std::size_t, int>> closed;
    bool ok = true;
    for (std::size_t p = 0; p < paths_.size() && ok; ++p) {
      auto& path = paths_[p];
      if (!path.open) continue;
      const auto end = path.cells.back();
      if (end.x + end.y >= level - 1 && level < static_cast<int>(levels_.size())) continue;
      const int slot = target_slot(static_cast<int>(path.cells.size()));
      if (slot < 0) {
        ok = false;
        break;
      }
      path.open = false;
      used_[static_cast<std::size_t>(slot)] = true;
      closed.emplace_back(p, slot);
    }
    if (ok) {
      if (level == static_cast<int>(levels_.size())) {
        finish();
      } else {
        assign(level, 0);
      }
    }
    for (auto [p, slot] : closed) {
      paths_[p].open = true;
      used_[static_cast<std::size_t>(slot)] = false;
    }
  }

  void assign(int level, std::size_t index) {
    const auto& cells = levels_[static_cast<std::size_t>(level)];
    if (index == cells.size()) {
      enter_level(level + 1);
      return;
    }
    const auto pt = cells[index];
    // Index access: the recursion below appends to paths_.
    for (std::size_t p = 0; p < paths_.size(); ++p) {
      if (!paths_[p].open) continue;
      const auto end = paths_[p].cells.back();
      if (end.x + end.y != level - 1) continue;
      const bool west = end.x == pt.x - 1 && end.y == pt.y;
      const bool south = end.x == pt.x && end.y == pt.y - 1;
      if (!west && !south) continue;
      paths_[p].cells.push_back(pt);
      assign(level, index + 1);
      paths_[p].cells.pop_back();
    }
    if (static_cast<int>(paths_.size()) < k_ - 1) {
      paths_.push_back(Path{{pt}, true});
      assign(level, index + 1);
      paths_.pop_back();
    }
  }

  void finish() {
    if (static_cast<int>(paths_.size()) != k_ - 1) return;
    if (std::find(used_.begin(), used_.end(), false) != used_.end()) return;
    ++count_;
    ZigzagDecomposition decomposition(paths_.size());
    const int m = mat_.rows();
    for (const auto& path : paths_) {
      ZigzagPath cells;
      for (auto pt : path.cells) cells.emplace_back(m - pt.y, pt.x + 1);
      const int slot = [&] {
        for (std::size_t t = 0; t < targets_.size(); ++t)
          if (targets_[t] == static_cast<int>(cells.size())) return static_cast<int>(t);
        return -1;
      }();
      decomposition[static_cast<std::size_t>(slot)] = std::move(cells);
    }
    if (visit_) visit_(decomposition);
  }

  const BinaryMatrix& mat_;
  int k_;
  const std::function<void(const ZigzagDecomposition&)>& visit_;
  std::vector<std::vector<LatticePoint>> levels_;
  std::vector<int> targets_;
  std::vector<bool> used_;
  std::vector<Path> paths_;
  BigInt count_ = 0;
};

}  // namespace

void for_each_zigzag_decomposition(const BinaryMatrix& mat, int k,
                                   const std::function<void(const ZigzagDecomposition&)>& visit) {
  require_maximal(mat, k);
  ZigzagSearch search(mat, k, visit);
  search.run();
}

BigInt count_zigzag_decompositions(const BinaryMatrix& mat, int k) {
  require_maximal(mat, k);
  std::function<void(const ZigzagDecomposition&)> none;
  ZigzagSearch search(mat, k, none);
  search.run();
  return search.count();
}

}  // namespace iam
