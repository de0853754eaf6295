#include "ladder/ladder.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ladder {

std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string to_string(Sidedness s) {
  switch (s) {
    case Sidedness::matrix: return "matrix";
    case Sidedness::one_sided: return "one-sided";
    case Sidedness::two_sided: return "two-sided";
    case Sidedness::other: return "other";
  }
  return "other";
}

Ladder Ladder::from_cells(std::vector<Cell> cells) {
  if (cells.empty()) throw DomainError("ladder has no cells");
  int min_r = std::numeric_limits<int>::max();
  int min_c = std::numeric_limits<int>::max();
  int max_r = std::numeric_limits<int>::min();
  int max_c = std::numeric_limits<int>::min();
  for (const Cell& c : cells) {
    min_r = std::min(min_r, c.row);
    min_c = std::min(min_c, c.col);
    max_r = std::max(max_r, c.row);
    max_c = std::max(max_c, c.col);
  }
  Ladder y;
  y.shift_ = Cell{min_r - 1, min_c - 1};
  y.m_ = max_r - min_r + 1;
  y.n_ = max_c - min_c + 1;
  for (Cell& c : cells) {
    c.row -= y.shift_.row;
    c.col -= y.shift_.col;
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  y.cells_ = std::move(cells);
  y.grid_.assign(static_cast<std::size_t>(y.m_) * y.n_, 0);
  for (const Cell& c : y.cells_) y.grid_[y.index(c)] = 1;

  // Closure: every comparable pair spans a rectangle whose other two
  // corners are present.
  for (std::size_t s = 0; s < y.cells_.size(); ++s) {
    const Cell a = y.cells_[s];
    for (std::size_t t = s + 1; t < y.cells_.size(); ++t) {
      const Cell b = y.cells_[t];
      if (a.col > b.col) continue;
      if (!y.contains(a.row, b.col) || !y.contains(b.row, a.col)) {
        const Cell ia{a.row + y.shift_.row, a.col + y.shift_.col};
        const Cell ib{b.row + y.shift_.row, b.col + y.shift_.col};
        throw DomainError("closure violation: cells " + to_string(ia) + " and " +
                          to_string(ib) + " require " +
                          to_string(Cell{ia.row, ib.col}) + " and " +
                          to_string(Cell{ib.row, ia.col}));
      }
    }
  }
  return y;
}

Ladder Ladder::rectangle(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("matrix dimensions must be positive");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) cells.push_back({i, j});
  return from_cells(std::move(cells));
}

Cell CornerProfile::lower_at(int i) const {
  if (i == 0) return {1, n};
  if (i == h() + 1) return {m, 1};
  if (i < 0 || i > h() + 1) throw std::out_of_range("lower corner index");
  return lower[static_cast<std::size_t>(i - 1)];
}

Cell CornerProfile::upper_at(int j) const {
  if (j == 0) return {1, n};
  if (j == k() + 1) return {m, 1};
  if (j < 0 || j > k() + 1) throw std::out_of_range("upper corner index");
  return upper[static_cast<std::size_t>(j - 1)];
}

CornerProfile corners(const Ladder& y) {
  CornerProfile p;
  p.m = y.rows();
  p.n = y.cols();
  for (const Cell& c : y.cells()) {
    const int a = c.row, b = c.col;
    if (y.contains(a - 1, b) && y.contains(a, b - 1) && !y.contains(a - 1, b - 1))
      p.lower.push_back(c);
    if (y.contains(a + 1, b) && y.contains(a, b + 1) && !y.contains(a + 1, b + 1))
      p.upper.push_back(c);
  }
  // cells() is row-major, so both lists are already sorted by row.
  return p;
}

std::vector<Cell> coincidental_corners(const CornerProfile& profile) {
  std::vector<Cell> out;
  std::set_intersection(profile.lower.begin(), profile.lower.end(),
                        profile.upper.begin(), profile.upper.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Cell> coincidental_corners(const Ladder& y) {
  return coincidental_corners(corners(y));
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

bool strictly_increasing_rows(const std::vector<Cell>& cs) {
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (cs[i].row <= cs[i - 1].row) return false;
  return true;
}

}  // namespace

std::size_t count_minors(const Ladder& y) {
  std::size_t total = 0;
  for (int i = 1; i <= y.rows(); ++i) {
    for (int p = i + 1; p <= y.rows(); ++p) {
      std::size_t shared = 0;
      for (int j = 1; j <= y.cols(); ++j)
        if (y.contains(i, j) && y.contains(p, j)) ++shared;
      if (shared >= 2) total += shared * (shared - 1) / 2;
    }
  }
  return total;
}

ValidationReport validate(const Ladder& y) {
  ValidationReport r;
  r.is_ladder = true;
  r.normalized = !y.was_translated();
  if (!r.normalized)
    r.messages.push_back("translated by " + to_string(y.input_shift()) +
                         " to a (1,1)-based bounding box");

  const int m = y.rows(), n = y.cols();
  auto id = [n](int row, int col) {
    return static_cast<std::size_t>(row - 1) * n + (col - 1);
  };

  // Two rows sharing >= 2 columns: every shared cell lies in a minor, and
  // all of them are linked through minors on that row pair.
  DisjointSets minors(static_cast<std::size_t>(m) * n);
  std::vector<char> in_minor(static_cast<std::size_t>(m) * n, 0);
  std::vector<int> shared;
  for (int i = 1; i <= m; ++i) {
    for (int p = i + 1; p <= m; ++p) {
      shared.clear();
      for (int j = 1; j <= n; ++j)
        if (y.contains(i, j) && y.contains(p, j)) shared.push_back(j);
      if (shared.size() < 2) continue;
      const std::size_t root = id(i, shared.front());
      for (int j : shared) {
        in_minor[id(i, j)] = in_minor[id(p, j)] = 1;
        minors.unite(id(i, j), root);
        minors.unite(id(p, j), root);
      }
    }
  }
  r.every_cell_in_minor = true;
  for (const Cell& c : y.cells()) {
    if (!in_minor[id(c.row, c.col)]) {
      r.every_cell_in_minor = false;
      r.messages.push_back("cell " + to_string(c) + " lies in no 2x2 minor");
    }
  }
  bool minor_connected = true;
  const std::size_t first = id(y.cells().front().row, y.cells().front().col);
  for (const Cell& c : y.cells()) {
    if (minors.find(id(c.row, c.col)) != minors.find(first)) {
      minor_connected = false;
      break;
    }
  }
  if (!minor_connected)
    r.messages.push_back("2x2 minors split into more than one connected block");
  r.two_connected = r.every_cell_in_minor && minor_connected;

  DisjointSets paths(static_cast<std::size_t>(m) * n);
  for (const Cell& c : y.cells()) {
    if (y.contains(c.row + 1, c.col)) paths.unite(id(c.row, c.col), id(c.row + 1, c.col));
    if (y.contains(c.row, c.col + 1)) paths.unite(id(c.row, c.col), id(c.row, c.col + 1));
  }
  r.path_connected = true;
  for (const Cell& c : y.cells()) {
    if (paths.find(id(c.row, c.col)) != paths.find(first)) {
      r.path_connected = false;
      r.messages.push_back("cell set is not path-connected");
      break;
    }
  }

  const CornerProfile prof = corners(y);
  const bool rows_ok =
      strictly_increasing_rows(prof.lower) && strictly_increasing_rows(prof.upper);
  if (!rows_ok) r.messages.push_back("inside corners share a row");
  if (!r.path_connected || !rows_ok) {
    r.sidedness = Sidedness::other;
  } else if (prof.h() == 0 && prof.k() == 0) {
    r.sidedness = Sidedness::matrix;
  } else if (prof.h() == 0 || prof.k() == 0) {
    r.sidedness = Sidedness::one_sided;
  } else {
    r.sidedness = Sidedness::two_sided;
  }
  if (r.two_connected && r.sidedness == Sidedness::other) {
    r.two_connected = false;
    r.messages.push_back("corner structure unsupported");
  }
  return r;
}

void require_two_connected(const Ladder& y) {
  const ValidationReport r = validate(y);
  if (r.two_connected) return;
  std::string why = "ladder is not 2-connected";
  for (const std::string& msg : r.messages) {
    if (msg.rfind("translated", 0) == 0) continue;
    why += ": " + msg;
    break;
  }
  throw DomainError(why);
}

Ladder antitranspose(const Ladder& y) {
  std::vector<Cell> out;
  out.reserve(y.size());
  for (const Cell& c : y.cells())
    out.push_back({y.cols() + 1 - c.col, y.rows() + 1 - c.row});
  return Ladder::from_cells(std::move(out));
}

Ladder compose(const std::vector<Ladder>& factors) {
  if (factors.empty()) throw DomainError("compose needs at least one factor");
  for (std::size_t u = 0; u < factors.size(); ++u) {
    const Ladder& z = factors[u];
    if (u + 1 < factors.size() && !z.contains(z.rows(), 1))
      throw DomainError("factor " + std::to_string(u) + " lacks its lower-left cell " +
                        to_string(Cell{z.rows(), 1}));
    if (u > 0 && !z.contains(1, z.cols()))
      throw DomainError("factor " + std::to_string(u) + " lacks its top-right cell " +
                        to_string(Cell{1, z.cols()}));
  }
  std::vector<Cell> acc = factors.front().cells();
  int acc_rows = factors.front().rows();
  for (std::size_t u = 1; u < factors.size(); ++u) {
    const Ladder& z = factors[u];
    // Shift the accumulated cells right so that its (m,1) lands on the
    // next factor's (1,n), which is moved down to row m.
    for (Cell& c : acc) c.col += z.cols() - 1;
    for (const Cell& c : z.cells()) {
      if (c == Cell{1, z.cols()}) continue;
      acc.push_back({c.row + acc_rows - 1, c.col});
    }
    acc_rows += z.rows() - 1;
  }
  return Ladder::from_cells(std::move(acc));
}

}  // namespace ladder
