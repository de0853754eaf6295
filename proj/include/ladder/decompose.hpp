#pragma once

#include <vector>

#include "ladder/ladder.hpp"

namespace ladder {

/// Translation taking factor-local coordinates to ladder coordinates:
/// global = local + (drow, dcol).
struct Offset {
  int drow = 0;
  int dcol = 0;

  Cell apply(Cell local) const { return {local.row + drow, local.col + dcol}; }
  Cell unapply(Cell global) const { return {global.row - drow, global.col - dcol}; }

  friend bool operator==(const Offset&, const Offset&) = default;
};

/// Y = Z_0 # Z_1 # ... # Z_w split at its coincidental inside corners.
struct Factorization {
  std::vector<Ladder> factors;
  /// Coincidental corners of Y in Y coordinates, sorted by row; the u-th
  /// entry (0-based) joins factors u and u+1.
  std::vector<Cell> coincidental;
  std::vector<Offset> offsets;
  std::vector<CornerProfile> per_factor_corners;
  int rows = 0;
  int cols = 0;

  int w() const { return static_cast<int>(coincidental.size()); }
};

/// Requires a 2-connected ladder. Factor u is the closed rectangle between
/// coincidental corners u and u+1. Throws DomainError if the pieces fail
/// to reassemble into Y.
Factorization decompose(const Ladder& y);

/// decompose(compose(factors)).factors == factors.
bool factorization_roundtrip_check(const std::vector<Ladder>& factors);

}  // namespace ladder
