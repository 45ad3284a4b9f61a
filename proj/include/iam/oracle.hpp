#pragma once

// Brute-force ground truth: backtracking enumeration of maximal
// I_k-avoiding matrices and skew-shape fillings.
//
// The search assigns cells in row-major order, 0 before 1, so results come
// out in row-major lexicographic order. Two prunes apply: a partial
// assignment that already holds a k-chain is dropped, and for rectangles a
// partial assignment whose zeros already exceed mn - max_ones is dropped.
// Leaves are accepted only after a full local-maximality test.
//
// The parallel entry points split the tree at the end of the second row and
// hand the subtrees to OpenMP workers; the merge restores canonical order.
// The *_serial entry points walk the same tree on one thread and are kept
// as the reference the parallel kernels are tested against.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "iam/bigint.hpp"
#include "iam/core.hpp"

namespace iam {

struct EnumerationBudget {
  /// Hard cap on the number of cells searched.
  std::size_t max_cells = 64;
  /// Stop after this many results (search runs serially when set).
  std::optional<std::size_t> max_results;
  /// When false, parallel results are appended in completion order.
  bool deterministic_order = true;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Return false to stop the enumeration.
using MatrixVisitor = std::function<bool(const BinaryMatrix&)>;

std::vector<BinaryMatrix> enumerate_maximal_iams(int m, int n, int k,
                                                 const EnumerationBudget& budget = {});
std::vector<BinaryMatrix> enumerate_maximal_iams_serial(int m, int n, int k,
                                                        const EnumerationBudget& budget = {});
/// Streams results one at a time on the calling thread.
void for_each_maximal_iam(int m, int n, int k, const EnumerationBudget& budget,
                          const MatrixVisitor& visit);

std::vector<Filling> enumerate_maximal_fillings(const SkewShape& shape, int k,
                                                const EnumerationBudget& budget = {});
std::vector<Filling> enumerate_maximal_fillings_serial(const SkewShape& shape, int k,
                                                       const EnumerationBudget& budget = {});

BigInt oracle_count(int m, int n, int k, const EnumerationBudget& budget = {});
BigInt oracle_count_serial(int m, int n, int k, const EnumerationBudget& budget = {});
BigInt oracle_count_shape(const SkewShape& shape, int k, const EnumerationBudget& budget = {});

/// Prune-free scan over all 2^(mn) matrices, m*n <= 16.
std::vector<BinaryMatrix> naive_enumerate(int m, int n, int k);

/// Prune-free scan over all 2^cells fillings using the definitional
/// in-shape predicates, cells <= 16.
std::vector<Filling> naive_enumerate_fillings(const SkewShape& shape, int k);

}  // namespace iam
