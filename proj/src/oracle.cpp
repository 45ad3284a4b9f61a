#include "iam/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <string>

namespace iam {

namespace {

// Row-major backtracking over the bounding box of a region. Cells outside
// the region are pinned to 0. `pre` holds the longest chain inside the
// top-left rectangle ending at each cell, which is all the chain prune needs.
// After each completed row, every zero placed so far must still be able to
// close a k-chain if all unassigned cells below became ones.
class RegionSearch {
 public:
  struct State {
    std::vector<std::uint8_t> val;
    std::vector<std::int16_t> pre;
    int zeros = 0;
  };

  RegionSearch(const SkewShape& shape, int k, int zero_budget)
      : m_(shape.rows()), n_(shape.cols()), k_(k), zero_budget_(zero_budget),
        stride_(static_cast<std::size_t>(n_ + 2)) {
    inside_.assign(static_cast<std::size_t>(m_ + 2) * stride_, 0);
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= n_; ++j) inside_[idx(i, j)] = shape.contains(i, j) ? 1 : 0;
  }

  int cell_total() const { return m_ * n_; }

  State fresh_state() const {
    State s;
    s.val.assign(static_cast<std::size_t>(m_ + 2) * stride_, 0);
    s.pre.assign(static_cast<std::size_t>(m_ + 2) * stride_, 0);
    return s;
  }

  // Walks the subtree below `pos`. `stop_at` cuts the walk at that depth and
  // hands the partial state to `on_leaf` instead of testing maximality.
  template <typename Leaf>
  bool walk(State& s, int pos, int stop_at, Leaf&& on_leaf) const {
    if (pos == stop_at) {
      if (stop_at < cell_total()) return on_leaf(s);
      if (!leaf_is_maximal(s)) return true;
      return on_leaf(s);
    }
    const int i = pos / n_ + 1;
    const int j = pos % n_ + 1;
    if (j == 1 && i > 1 && !zeros_can_close(s, i - 1)) return true;
    const auto here = idx(i, j);
    const int base = std::max(s.pre[idx(i - 1, j)], s.pre[idx(i, j - 1)]);
    if (!inside_[here]) {
      s.val[here] = 0;
      s.pre[here] = static_cast<std::int16_t>(base);
      return walk(s, pos + 1, stop_at, on_leaf);
    }
    if (zero_budget_ < 0 || s.zeros < zero_budget_) {
      s.val[here] = 0;
      s.pre[here] = static_cast<std::int16_t>(base);
      ++s.zeros;
      bool go_on = walk(s, pos + 1, stop_at, on_leaf);
      --s.zeros;
      if (!go_on) return false;
    }
    const int with_one = std::max(base, s.pre[idx(i - 1, j - 1)] + 1);
    if (with_one < k_) {
      s.val[here] = 1;
      s.pre[here] = static_cast<std::int16_t>(with_one);
      if (!walk(s, pos + 1, stop_at, on_leaf)) return false;
    }
    return true;
  }

  BinaryMatrix to_matrix(const State& s) const {
    BinaryMatrix out(m_, n_);
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (s.val[idx(i, j)]) out.set(i, j, true);
    return out;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * stride_ + static_cast<std::size_t>(j);
  }

  bool zeros_can_close(const State& s, int last_row) const {
    thread_local std::vector<std::int16_t> opt;
    opt.assign(s.pre.size(), 0);
    for (int i = m_; i >= 1; --i) {
      for (int j = n_; j >= 1; --j) {
        const auto here = idx(i, j);
        int v = std::max(opt[idx(i + 1, j)], opt[idx(i, j + 1)]);
        const bool one = i > last_row ? inside_[here] != 0 : s.val[here] != 0;
        if (one) v = std::max(v, opt[idx(i + 1, j + 1)] + 1);
        opt[here] = static_cast<std::int16_t>(v);
      }
    }
    for (int i = 1; i <= last_row; ++i) {
      for (int j = 1; j <= n_; ++j) {
        const auto here = idx(i, j);
        if (!inside_[here] || s.val[here]) continue;
        if (s.pre[idx(i - 1, j - 1)] + 1 + opt[idx(i + 1, j + 1)] < k_) return false;
      }
    }
    return true;
  }

  bool leaf_is_maximal(const State& s) const {
    std::vector<std::int16_t> suf(s.pre.size(), 0);
    for (int i = m_; i >= 1; --i) {
      for (int j = n_; j >= 1; --j) {
        int v = std::max(suf[idx(i + 1, j)], suf[idx(i, j + 1)]);
        if (s.val[idx(i, j)]) v = std::max(v, suf[idx(i + 1, j + 1)] + 1);
        suf[idx(i, j)] = static_cast<std::int16_t>(v);
      }
    }
    for (int i = 1; i <= m_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        const auto here = idx(i, j);
        if (!inside_[here] || s.val[here]) continue;
        if (s.pre[idx(i - 1, j - 1)] + 1 + suf[idx(i + 1, j + 1)] < k_) return false;
      }
    }
    return true;
  }

  int m_;
  int n_;
  int k_;
  int zero_budget_;
  std::size_t stride_;
  std::vector<std::uint8_t> inside_;
};

void check_budget(std::int64_t cells, const EnumerationBudget& budget) {
  if (cells < 0 || static_cast<std::size_t>(cells) > budget.max_cells) {
    throw BudgetExceeded("search over " + std::to_string(cells) + " cells exceeds the budget of " +
                         std::to_string(budget.max_cells));
  }
}

RegionSearch matrix_search(int m, int n, int k, const EnumerationBudget& budget) {
  require_k_in_range(m, n, k);
  check_budget(static_cast<std::int64_t>(m) * n, budget);
  const auto zero_budget = static_cast<int>(static_cast<std::int64_t>(m) * n - max_ones(m, n, k));
  return RegionSearch(SkewShape::rectangle(m, n), k, zero_budget);
}

RegionSearch shape_search(const SkewShape& shape, int k, const EnumerationBudget& budget) {
  if (!filling_domain_ok(shape, k)) {
    throw std::invalid_argument("shape " + shape.to_string() + " is not admissible for k=" +
                                std::to_string(k));
  }
  check_budget(shape.cell_count(), budget);
  return RegionSearch(shape, k, -1);
}

// Serial walk of the whole tree, materializing each accepted leaf.
template <typename Emit>
void run_serial(const RegionSearch& search, const EnumerationBudget& budget, Emit&& emit) {
  auto state = search.fresh_state();
  std::size_t produced = 0;
  search.walk(state, 0, search.cell_total(), [&](const RegionSearch::State& s) {
    emit(search.to_matrix(s));
    ++produced;
    return !budget.max_results || produced < *budget.max_results;
  });
}

std::vector<RegionSearch::State> split_frontier(const RegionSearch& search, int depth) {
  std::vector<RegionSearch::State> frontier;
  auto state = search.fresh_state();
  search.walk(state, 0, depth, [&](const RegionSearch::State& s) {
    frontier.push_back(s);
    return true;
  });
  return frontier;
}

int split_depth(const RegionSearch& search, int cols) {
  return std::min(2 * cols, search.cell_total());
}

// Parallel walk; one result bucket per frontier state keeps the merge in
// canonical order.
std::vector<BinaryMatrix> run_parallel(const RegionSearch& search, int cols,
                                       const EnumerationBudget& budget) {
  const int depth = split_depth(search, cols);
  auto frontier = split_frontier(search, depth);
  const auto count = static_cast<std::int64_t>(frontier.size());
  std::vector<std::vector<BinaryMatrix>> buckets(frontier.size());
  std::vector<BinaryMatrix> unordered;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t f = 0; f < count; ++f) {
    auto& state = frontier[static_cast<std::size_t>(f)];
    auto& bucket = buckets[static_cast<std::size_t>(f)];
    search.walk(state, depth, search.cell_total(), [&](const RegionSearch::State& s) {
      bucket.push_back(search.to_matrix(s));
      return true;
    });
    if (!budget.deterministic_order) {
#pragma omp critical(iam_oracle_merge)
      for (auto& mat : bucket) unordered.push_back(std::move(mat));
    }
  }

  if (!budget.deterministic_order) return unordered;
  std::vector<BinaryMatrix> out;
  for (auto& bucket : buckets)
    for (auto& mat : bucket) out.push_back(std::move(mat));
  return out;
}

BigInt count_parallel(const RegionSearch& search, int cols) {
  const int depth = split_depth(search, cols);
  auto frontier = split_frontier(search, depth);
  const auto count = static_cast<std::int64_t>(frontier.size());
  std::int64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t f = 0; f < count; ++f) {
    std::int64_t local = 0;
    search.walk(frontier[static_cast<std::size_t>(f)], depth, search.cell_total(),
                [&](const RegionSearch::State&) {
                  ++local;
                  return true;
                });
    total += local;
  }
  return BigInt(static_cast<long>(total));
}

std::vector<Filling> as_fillings(const SkewShape& shape, std::vector<BinaryMatrix> mats) {
  std::vector<Filling> out;
  out.reserve(mats.size());
  for (const auto& mat : mats) out.emplace_back(shape, mat);
  return out;
}

}  // namespace

std::vector<BinaryMatrix> enumerate_maximal_iams(int m, int n, int k, const EnumerationBudget& budget) {
  auto search = matrix_search(m, n, k, budget);
  if (budget.max_results) return enumerate_maximal_iams_serial(m, n, k, budget);
  return run_parallel(search, n, budget);
}

std::vector<BinaryMatrix> enumerate_maximal_iams_serial(int m, int n, int k,
                                                        const EnumerationBudget& budget) {
  auto search = matrix_search(m, n, k, budget);
  std::vector<BinaryMatrix> out;
  run_serial(search, budget, [&](BinaryMatrix mat) { out.push_back(std::move(mat)); });
  return out;
}

void for_each_maximal_iam(int m, int n, int k, const EnumerationBudget& budget,
                          const MatrixVisitor& visit) {
  auto search = matrix_search(m, n, k, budget);
  auto state = search.fresh_state();
  std::size_t produced = 0;
  search.walk(state, 0, search.cell_total(), [&](const RegionSearch::State& s) {
    if (!visit(search.to_matrix(s))) return false;
    ++produced;
    return !budget.max_results || produced < *budget.max_results;
  });
}

std::vector<Filling> enumerate_maximal_fillings(const SkewShape& shape, int k,
                                                const EnumerationBudget& budget) {
  auto search = shape_search(shape, k, budget);
  if (budget.max_results) return enumerate_maximal_fillings_serial(shape, k, budget);
  return as_fillings(shape, run_parallel(search, shape.cols(), budget));
}

std::vector<Filling> enumerate_maximal_fillings_serial(const SkewShape& shape, int k,
                                                       const EnumerationBudget& budget) {
  auto search = shape_search(shape, k, budget);
  std::vector<BinaryMatrix> mats;
  run_serial(search, budget, [&](BinaryMatrix mat) { mats.push_back(std::move(mat)); });
  return as_fillings(shape, std::move(mats));
}

BigInt oracle_count(int m, int n, int k, const EnumerationBudget& budget) {
  return count_parallel(matrix_search(m, n, k, budget), n);
}

BigInt oracle_count_serial(int m, int n, int k, const EnumerationBudget& budget) {
  auto search = matrix_search(m, n, k, budget);
  auto state = search.fresh_state();
  long total = 0;
  search.walk(state, 0, search.cell_total(), [&](const RegionSearch::State&) {
    ++total;
    return true;
  });
  return BigInt(total);
}

BigInt oracle_count_shape(const SkewShape& shape, int k, const EnumerationBudget& budget) {
  return count_parallel(shape_search(shape, k, budget), shape.cols());
}

std::vector<BinaryMatrix> naive_enumerate(int m, int n, int k) {
  require_k_in_range(m, n, k);
  const int cells = m * n;
  if (cells > 16) {
    throw BudgetExceeded("naive enumeration is limited to 16 cells, got " + std::to_string(cells));
  }
  std::vector<BinaryMatrix> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cells); ++mask) {
    BinaryMatrix mat(m, n);
    // Bit (cells-1-p) holds cell p so that increasing masks follow
    // row-major lexicographic order.
    for (int p = 0; p < cells; ++p)
      if ((mask >> (cells - 1 - p)) & 1U) mat.set(p / n + 1, p % n + 1, true);
    if (!contains_ik(mat, k) && is_locally_maximal(mat, k)) out.push_back(std::move(mat));
  }
  return out;
}

std::vector<Filling> naive_enumerate_fillings(const SkewShape& shape, int k) {
  if (!filling_domain_ok(shape, k)) {
    throw std::invalid_argument("shape " + shape.to_string() + " is not admissible for k=" +
                                std::to_string(k));
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= shape.rows(); ++i)
    for (int j = shape.mu()[i] + 1; j <= shape.lambda()[i]; ++j) cells.emplace_back(i, j);
  const int count = static_cast<int>(cells.size());
  if (count > 16) {
    throw BudgetExceeded("naive filling enumeration is limited to 16 cells, got " +
                         std::to_string(count));
  }
  std::vector<Filling> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << count); ++mask) {
    Filling f(shape);
    for (int p = 0; p < count; ++p)
      if ((mask >> (count - 1 - p)) & 1U)
        f.set(cells[static_cast<std::size_t>(p)].first, cells[static_cast<std::size_t>(p)].second, true);
    if (is_maximal_filling(f, k)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace iam
