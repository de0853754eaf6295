#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ladder/classgroup.hpp"
#include "ladder/decompose.hpp"

namespace ladder {

/// Gorenstein criterion for R_2(Y): m = n and every inside corner (r,s)
/// lies on the antidiagonal r + s = m + 1.
bool is_gorenstein(const Ladder& y);

struct FactorSummary {
  int m = 0;
  int n = 0;
  bool gorenstein = false;
  int epsilon = 1;
  DivisorClass omega_image;
};

/// Semidualizing classes of R_2(Y) as subset sums of the factor canonical
/// classes. count = 2^(sum of epsilons).
struct SdmReport {
  int rank = 0;
  DivisorClass omega;
  std::vector<FactorSummary> factors;
  std::uint64_t count = 1;
  std::vector<DivisorClass> classes;
  /// thetas[t][u] is the coefficient of factor u's canonical class in
  /// classes[t]; lexicographic order.
  std::vector<std::vector<int>> thetas;
};

/// Largest number of non-Gorenstein factors for which classes are listed.
inline constexpr int kMaxEnumeratedFactors = 24;

SdmReport classify(const Ladder& y);

/// Z_0 # ... # Z_{N-1} of full non-square matrices of the given sizes.
Ladder construct_2N(int count, const std::vector<std::pair<int, int>>& sizes);

}  // namespace ladder
