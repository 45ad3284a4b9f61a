#pragma once

// Closed-form counts: the box product H(a,b,c), the number of maximal
// I_k-avoiding matrices, and the ten symmetry-class counts.

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "iam/bigint.hpp"

namespace iam {

/// prod_{i<=a, j<=b, l<=c} (i+j+l-1)/(i+j+l-2), the number of plane
/// partitions in an a x b x c box. Any zero argument gives 1.
BigInt hprod(int a, int b, int c);

/// |M_{m,n;k}| = H(m-k+1, n-k+1, k-1).
BigInt count_iams(int m, int n, int k);

enum class SymmetryClassTag { U, DS, AS, DAS, VS, HS, VHS, QTS, HTS, TS };

inline constexpr std::array<SymmetryClassTag, 10> kAllSymmetryTags = {
    SymmetryClassTag::U,  SymmetryClassTag::DS,  SymmetryClassTag::AS,  SymmetryClassTag::DAS,
    SymmetryClassTag::VS, SymmetryClassTag::HS,  SymmetryClassTag::VHS, SymmetryClassTag::QTS,
    SymmetryClassTag::HTS, SymmetryClassTag::TS};

std::string_view to_string(SymmetryClassTag tag);
SymmetryClassTag parse_symmetry_tag(std::string_view text);

/// DS, AS, DAS, QTS and TS only make sense for square matrices.
bool requires_square(SymmetryClassTag tag);

/// Closed-form size of the class of m x n IAMs fixed by the tag's group.
BigInt count_symmetry(SymmetryClassTag tag, int m, int n, int k);

/// For K = 2k-1 <= n: (U == DS * AS, HTS == DAS^2) on n x n matrices.
std::pair<bool, bool> check_product_relations(int n, int k);

}  // namespace iam
