#pragma once

// Matrix statistics and the (q,t) generating function of maximal
// I_k-avoiding matrices, evaluated exactly at rational points.

#include <cstdint>
#include <utility>
#include <vector>

#include "iam/bigint.hpp"
#include "iam/core.hpp"
#include "iam/qpoly.hpp"

namespace iam {

struct StatRecord {
  std::int64_t v = 0;
  std::int64_t vd = 0;
  std::vector<int> d;

  bool operator==(const StatRecord&) const = default;
};

/// Ones strictly down-right of the zero (i, j) on its diagonal.
int stat_v_cell(const BinaryMatrix& m, int i, int j);
std::int64_t stat_v(const BinaryMatrix& m);
/// Sum of v over the zeros on the main diagonal.
std::int64_t stat_vd(const BinaryMatrix& m);
/// Zeros strictly up-left of the one (i, j) on its diagonal.
int stat_w_cell(const BinaryMatrix& m, int i, int j);
/// d_j = w at the main-diagonal cell of path j, path 1 bottom-most.
std::vector<int> stat_d(const BinaryMatrix& m, int k);
StatRecord stats(const BinaryMatrix& m, int k);

/// q^v t^vd prod_l (q^{k-l};q)_{d_l} / (t q^{k-l};q)_{d_l}. Throws
/// std::domain_error when a denominator factor vanishes.
Rational weight_at(const BinaryMatrix& m, int k, const Rational& q, const Rational& t);
Rational weight_from_stats(const StatRecord& s, int k, const Rational& q, const Rational& t);

/// Sum of weight_at over every maximal IAM.
Rational gf_lhs(int m, int n, int k, const Rational& q, const Rational& t);
/// prod (1 - t q^{i+j+l-1}) / (1 - t q^{i+j+l-2}) over the
/// (m-k+1) x (n-k+1) x (k-1) box.
Rational gf_rhs(int m, int n, int k, const Rational& q, const Rational& t);
/// Value of the right-hand side at t = 1 as q -> 1, taken from the
/// factored q-integer form.
BigInt gf_rhs_t1_limit(int m, int n, int k);

/// Sum of q^{v(M)} over the oracle stream.
QPoly volume_gf_oracle(int m, int n, int k);
/// prod (1 - q^{i+j+l-1}) / (1 - q^{i+j+l-2}) by exact polynomial arithmetic.
QPoly volume_gf_product(int a, int b, int c);
/// Both routes; throws InvariantViolation if they differ.
QPoly volume_gf(int m, int n, int k);
/// Sum of q^{vol(pi)} over all plane partitions in the box.
QPoly pp_volume_gf(int a, int b, int c);

/// Fixed-seed rational points (q, t) with small numerators and
/// denominators, q not in {0, 1, -1}, and t q^e != 1 for 0 <= e <= max_exponent.
std::vector<std::pair<Rational, Rational>> sample_gf_points(std::uint64_t seed, int count,
                                                            int max_exponent);

}  // namespace iam
