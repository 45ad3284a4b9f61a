#include "iam/symmetry.hpp"

#include <stdexcept>

namespace iam {

namespace {

// Each element acts on doubled centred coordinates u = 2i-(m+1),
// v = 2j-(n+1) by a signed permutation matrix.
struct Signed2x2 {
  int a, b, c, d;
  bool operator==(const Signed2x2&) const = default;
};

Signed2x2 matrix_of(D8Element g) {
  switch (g) {
    case D8Element::id: return {1, 0, 0, 1};
    case D8Element::transpose: return {0, 1, 1, 0};
    case D8Element::fliph: return {-1, 0, 0, 1};
    case D8Element::flipv: return {1, 0, 0, -1};
    case D8Element::rot180: return {-1, 0, 0, -1};
    case D8Element::antitranspose: return {0, -1, -1, 0};
    case D8Element::rot90: break;
    case D8Element::rot270: return {0, -1, 1, 0};
  }
  // rot90 = transpose after fliph.
  const auto t = matrix_of(D8Element::transpose);
  const auto f = matrix_of(D8Element::fliph);
  return {t.a * f.a + t.b * f.c, t.a * f.b + t.b * f.d, t.c * f.a + t.d * f.c,
          t.c * f.b + t.d * f.d};
}

D8Element element_of(const Signed2x2& s) {
  for (auto g : kAllD8)
    if (matrix_of(g) == s) return g;
  throw std::logic_error("not a D8 matrix");
}

}  // namespace

std::string_view to_string(D8Element g) {
  switch (g) {
    case D8Element::id: return "id";
    case D8Element::rot90: return "rot90";
    case D8Element::rot180: return "rot180";
    case D8Element::rot270: return "rot270";
    case D8Element::transpose: return "transpose";
    case D8Element::antitranspose: return "antitranspose";
    case D8Element::fliph: return "fliph";
    case D8Element::flipv: return "flipv";
  }
  return "?";
}

D8Element compose(D8Element g, D8Element h) {
  const auto x = matrix_of(h);
  const auto y = matrix_of(g);
  return element_of({x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                     x.c * y.b + x.d * y.d});
}

D8Element inverse(D8Element g) {
  for (auto h : kAllD8)
    if (compose(g, h) == D8Element::id) return h;
  throw std::logic_error("D8 element without inverse");
}

bool swaps_dimensions(D8Element g) { return matrix_of(g).a == 0; }

BinaryMatrix apply(const BinaryMatrix& mat, D8Element g) {
  const int m = mat.rows();
  const int n = mat.cols();
  const auto s = matrix_of(g);
  const int out_m = s.a == 0 ? n : m;
  const int out_n = s.a == 0 ? m : n;
  BinaryMatrix out(out_m, out_n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!mat.at(i, j)) continue;
      const int u = 2 * i - (m + 1);
      const int v = 2 * j - (n + 1);
      const int u2 = s.a * u + s.b * v;
      const int v2 = s.c * u + s.d * v;
      out.set((u2 + out_m + 1) / 2, (v2 + out_n + 1) / 2, true);
    }
  }
  return out;
}

bool in_class(const BinaryMatrix& mat, SymmetryClassTag tag) {
  const bool square = mat.rows() == mat.cols();
  auto fixed = [&](D8Element g) { return apply(mat, g) == mat; };
  using T = SymmetryClassTag;
  switch (tag) {
    case T::U: return true;
    case T::DS: return square && fixed(D8Element::transpose);
    case T::AS: return square && fixed(D8Element::antitranspose);
    case T::DAS: return square && fixed(D8Element::transpose) && fixed(D8Element::antitranspose);
    case T::VS: return fixed(D8Element::flipv);
    case T::HS: return fixed(D8Element::fliph);
    case T::VHS: return fixed(D8Element::flipv) && fixed(D8Element::fliph);
    case T::QTS: return square && fixed(D8Element::rot90);
    case T::HTS: return fixed(D8Element::rot180);
    case T::TS: return square && fixed(D8Element::rot90) && fixed(D8Element::transpose);
  }
  return false;
}

std::set<SymmetryClassTag> classes_of(const BinaryMatrix& mat, int k) {
  if (!is_maximal_iam(mat, k)) throw std::invalid_argument("classes_of needs a maximal IAM");
  std::set<SymmetryClassTag> out;
  for (auto tag : kAllSymmetryTags)
    if (in_class(mat, tag)) out.insert(tag);
  return out;
}

PlanePartition pp_reflect(const PlanePartition& pp) {
  if (pp.rows() != pp.cols()) throw std::invalid_argument("reflection needs a square plane partition");
  PlanePartition out(pp.rows(), pp.cols(), pp.bound());
  for (int i = 1; i <= pp.rows(); ++i)
    for (int j = 1; j <= pp.cols(); ++j) out.set(i, j, pp.at(j, i));
  return out;
}

PlanePartition pp_complement(const PlanePartition& pp) {
  const int a = pp.rows();
  const int b = pp.cols();
  PlanePartition out(a, b, pp.bound());
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) out.set(i, j, pp.bound() - pp.at(a + 1 - i, b + 1 - j));
  return out;
}

bool is_S(const PlanePartition& pp) { return pp_reflect(pp) == pp; }
bool is_SC(const PlanePartition& pp) { return pp_complement(pp) == pp; }
bool is_TC(const PlanePartition& pp) { return pp_reflect(pp_complement(pp)) == pp; }
bool is_SSC(const PlanePartition& pp) { return is_S(pp) && is_SC(pp); }

std::array<BigInt, 10> brute_count_all_classes(int m, int n, int k, const EnumerationBudget& budget) {
  const auto matrices = enumerate_maximal_iams(m, n, k, budget);
  std::array<BigInt, 10> counts;
  for (auto& c : counts) c = 0;
  const long total = static_cast<long>(matrices.size());
  std::array<long, 10> local{};
#pragma omp parallel
  {
    std::array<long, 10> mine{};
#pragma omp for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
      for (std::size_t t = 0; t < kAllSymmetryTags.size(); ++t)
        if (in_class(matrices[static_cast<std::size_t>(idx)], kAllSymmetryTags[t])) ++mine[t];
    }
#pragma omp critical
    for (std::size_t t = 0; t < local.size(); ++t) local[t] += mine[t];
  }
  for (std::size_t t = 0; t < counts.size(); ++t) counts[t] = local[t];
  return counts;
}

BigInt brute_count_class(SymmetryClassTag tag, int m, int n, int k, const EnumerationBudget& budget) {
  require_k_in_range(m, n, k);
  if (requires_square(tag) && m != n) {
    throw std::invalid_argument(std::string(to_string(tag)) + " requires a square matrix");
  }
  BigInt count = 0;
  for_each_maximal_iam(m, n, k, budget, [&](const BinaryMatrix& mat) {
    if (in_class(mat, tag)) ++count;
    return true;
  });
  return count;
}

}  // namespace iam
