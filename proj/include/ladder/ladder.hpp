#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ladder {

/// A position X_{row,col} in the ambient matrix, 1-based, rows growing
/// downward and columns growing rightward. Ordering is row-major.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

/// Input could not be read as a ladder description (bad JSON, bad grid).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input was readable but violates a mathematical precondition
/// (closure axiom, 2-connectedness, factor shape, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite nonempty cell set closed under the ladder rule: if (i,j) and
/// (p,q) are cells with i <= p and j <= q, then (i,q) and (p,j) are cells.
/// Always stored translated so the bounding box is [1,m] x [1,n].
class Ladder {
 public:
  /// Builds a ladder from arbitrary cells. Duplicates are dropped and the
  /// set is translated to a (1,1)-based bounding box. Throws DomainError on
  /// an empty set or a closure violation (naming one violating pair).
  static Ladder from_cells(std::vector<Cell> cells);

  /// Full m x n matrix of indeterminates.
  static Ladder rectangle(int m, int n);

  int rows() const { return m_; }
  int cols() const { return n_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }

  bool contains(Cell c) const {
    return c.row >= 1 && c.row <= m_ && c.col >= 1 && c.col <= n_ &&
           grid_[index(c)] != 0;
  }
  bool contains(int row, int col) const { return contains(Cell{row, col}); }

  /// Translation that was subtracted from the input coordinates.
  Cell input_shift() const { return shift_; }
  bool was_translated() const { return shift_.row != 0 || shift_.col != 0; }

  bool is_full_matrix() const {
    return cells_.size() == static_cast<std::size_t>(m_) * n_;
  }

  friend bool operator==(const Ladder& a, const Ladder& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  Ladder() = default;
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.row - 1) * n_ + (c.col - 1);
  }

  int m_ = 0;
  int n_ = 0;
  Cell shift_{0, 0};
  std::vector<Cell> cells_;
  std::vector<char> grid_;
};

/// Inside corners with sentinels. lower[i-1] is (a_i,b_i) for i = 1..h and
/// upper[j-1] is (c_j,d_j) for j = 1..k, both sorted by row.
struct CornerProfile {
  std::vector<Cell> lower;
  std::vector<Cell> upper;
  int m = 0;
  int n = 0;

  int h() const { return static_cast<int>(lower.size()); }
  int k() const { return static_cast<int>(upper.size()); }

  /// (a_i,b_i) for i in [0, h+1]; (a_0,b_0) = (1,n), (a_{h+1},b_{h+1}) = (m,1).
  Cell lower_at(int i) const;
  /// (c_j,d_j) for j in [0, k+1] with the same sentinels.
  Cell upper_at(int j) const;
};

enum class Sidedness { matrix, one_sided, two_sided, other };

std::string to_string(Sidedness s);

struct ValidationReport {
  bool is_ladder = true;
  /// True when the input already sat in a (1,1)-based bounding box.
  bool normalized = true;
  bool every_cell_in_minor = false;
  bool two_connected = false;
  bool path_connected = false;
  Sidedness sidedness = Sidedness::other;
  std::vector<std::string> messages;
};

ValidationReport validate(const Ladder& y);

/// Throws DomainError unless validate(y).two_connected.
void require_two_connected(const Ladder& y);

CornerProfile corners(const Ladder& y);

/// Cells that are both a lower and an upper inside corner, sorted by row.
std::vector<Cell> coincidental_corners(const Ladder& y);
std::vector<Cell> coincidental_corners(const CornerProfile& profile);

/// Reflection across the antidiagonal: (i,j) -> (n+1-j, m+1-i).
Ladder antitranspose(const Ladder& y);

/// Z_0 # Z_1 # ... : the lower-left cell (m,1) of the accumulated ladder is
/// identified with the top-right cell (1,n) of the next factor.
Ladder compose(const std::vector<Ladder>& factors);

/// Number of 2x2 minors lying entirely in y.
std::size_t count_minors(const Ladder& y);

}  // namespace ladder
