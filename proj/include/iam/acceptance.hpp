#pragma once

// End-to-end verification suite: eleven numbered checks, each comparing a
// closed form or bijection against exhaustive enumeration under a time limit.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace iam {

inline constexpr std::uint64_t kDefaultSeed = 2024;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct AcceptanceOptions {
  /// Smaller sweeps for a fast smoke run.
  bool quick = false;
  std::uint64_t seed = kDefaultSeed;
  /// Criterion ids to run; empty runs all.
  std::vector<int> only;
};

using ResultCallback = std::function<void(const CriterionResult&)>;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const ResultCallback& on_result = {});

/// "PASS  3 name [1.23s] detail"
std::string format_result(const CriterionResult& r);

}  // namespace iam
