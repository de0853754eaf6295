#include "ladder/decompose.hpp"

#include <string>

namespace ladder {

Factorization decompose(const Ladder& y) {
  require_two_connected(y);
  const CornerProfile profile = corners(y);
  Factorization f;
  f.coincidental = coincidental_corners(profile);
  f.rows = y.rows();
  f.cols = y.cols();
  const int w = f.w();
  const int m = y.rows(), n = y.cols();

  std::vector<char> covered(y.size(), 0);
  std::size_t total = 0;
  for (int u = 0; u <= w; ++u) {
    const int top = u == 0 ? 1 : f.coincidental[u - 1].row;
    const int right = u == 0 ? n : f.coincidental[u - 1].col;
    const int bottom = u == w ? m : f.coincidental[u].row;
    const int left = u == w ? 1 : f.coincidental[u].col;
    std::vector<Cell> piece;
    for (std::size_t s = 0; s < y.size(); ++s) {
      const Cell c = y.cells()[s];
      if (c.row >= top && c.row <= bottom && c.col >= left && c.col <= right) {
        piece.push_back(c);
        covered[s] = 1;
      }
    }
    if (piece.empty())
      throw DomainError("factor " + std::to_string(u) + " of the decomposition is empty");
    total += piece.size();
    Ladder z = Ladder::from_cells(std::move(piece));
    f.offsets.push_back({z.input_shift().row, z.input_shift().col});
    f.per_factor_corners.push_back(corners(z));
    f.factors.push_back(std::move(z));
  }

  for (char c : covered)
    if (!c) throw DomainError("decomposition does not cover the ladder; not a # of ladders");
  if (total != y.size() + static_cast<std::size_t>(w))
    throw DomainError("consecutive factors must overlap in exactly one cell");
  for (int u = 0; u < w; ++u) {
    const Cell cc = f.coincidental[u];
    const Ladder& upper = f.factors[u];
    const Ladder& lower = f.factors[u + 1];
    if (f.offsets[u].unapply(cc) != Cell{upper.rows(), 1} ||
        f.offsets[u + 1].unapply(cc) != Cell{1, lower.cols()})
      throw DomainError("coincidental corner " + to_string(cc) +
                        " is not the gluing cell of its factors");
  }
  for (int u = 0; u <= w; ++u) {
    if (!coincidental_corners(f.per_factor_corners[u]).empty())
      throw DomainError("factor " + std::to_string(u) + " has a coincidental corner");
    if (!validate(f.factors[u]).two_connected)
      throw DomainError("factor " + std::to_string(u) + " is not 2-connected");
  }
  if (!(compose(f.factors) == y))
    throw DomainError("factors do not recompose to the ladder");
  return f;
}

bool factorization_roundtrip_check(const std::vector<Ladder>& factors) {
  return decompose(compose(factors)).factors == factors;
}

}  // namespace ladder
