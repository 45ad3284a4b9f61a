#pragma once

// The dihedral group D8 acting on matrices, symmetry-class membership, and
// the plane-partition involutions that the classes correspond to.

#include <array>
#include <set>
#include <string_view>

#include "iam/bigint.hpp"
#include "iam/bijection.hpp"
#include "iam/core.hpp"
#include "iam/formulas.hpp"
#include "iam/oracle.hpp"

namespace iam {

enum class D8Element { id, rot90, rot180, rot270, transpose, antitranspose, fliph, flipv };

inline constexpr std::array<D8Element, 8> kAllD8 = {
    D8Element::id,        D8Element::rot90,         D8Element::rot180, D8Element::rot270,
    D8Element::transpose, D8Element::antitranspose, D8Element::fliph,  D8Element::flipv};

std::string_view to_string(D8Element g);

/// g then h: apply(M, compose(g, h)) == apply(apply(M, g), h).
D8Element compose(D8Element g, D8Element h);
D8Element inverse(D8Element g);
/// True for the four elements that swap the row and column counts.
bool swaps_dimensions(D8Element g);

BinaryMatrix apply(const BinaryMatrix& m, D8Element g);

/// Fixed-point membership in every class; U is always present. Square-only
/// classes are never reported for non-square input.
std::set<SymmetryClassTag> classes_of(const BinaryMatrix& m, int k);
/// Membership in one class without building the whole set.
bool in_class(const BinaryMatrix& m, SymmetryClassTag tag);

/// re(pi)_{i,j} = pi_{j,i}; requires a square array.
PlanePartition pp_reflect(const PlanePartition& pp);
/// co(pi)_{i,j} = c - pi_{a+1-i, b+1-j}.
PlanePartition pp_complement(const PlanePartition& pp);
bool is_S(const PlanePartition& pp);
bool is_SC(const PlanePartition& pp);
bool is_TC(const PlanePartition& pp);
bool is_SSC(const PlanePartition& pp);

/// Number of oracle-enumerated maximal IAMs fixed by the tag's group.
BigInt brute_count_class(SymmetryClassTag tag, int m, int n, int k,
                         const EnumerationBudget& budget = {});
/// All ten class counts from a single enumeration, indexed like
/// kAllSymmetryTags. Square-only classes count 0 when m != n.
std::array<BigInt, 10> brute_count_all_classes(int m, int n, int k,
                                               const EnumerationBudget& budget = {});

}  // namespace iam
