#include <doctest.h>

#include <random>

#include "ladder/io.hpp"
#include "ladder/ladder.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ladder;

namespace {

std::vector<Cell> reflect(const std::vector<Cell>& cs, int m, int n) {
  std::vector<Cell> out;
  for (const Cell& c : cs) out.push_back({n + 1 - c.col, m + 1 - c.row});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("from_cells normalizes and rejects closure violations") {
  const Ladder one = Ladder::from_cells({{1, 1}});
  CHECK(one.rows() == 1);
  CHECK(one.cols() == 1);

  const Ladder shifted = Ladder::from_cells({{3, 5}, {3, 6}, {4, 5}, {4, 6}, {3, 6}});
  CHECK(shifted == Ladder::rectangle(2, 2));
  CHECK(shifted.was_translated());
  CHECK(shifted.input_shift() == Cell{2, 4});

  CHECK_THROWS_AS(Ladder::from_cells({}), DomainError);
  try {
    Ladder::from_cells({{1, 1}, {2, 2}});
    FAIL("closure violation accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
  }
}

TEST_CASE("L_3 is read as a 5x3 ladder with 11 cells") {
  const Ladder y = fixtures::l3();
  CHECK(y.rows() == 5);
  CHECK(y.cols() == 3);
  CHECK(y.size() == 11);
  CHECK(y.contains(1, 2));
  CHECK_FALSE(y.contains(1, 1));
  CHECK_FALSE(y.contains(5, 3));
}

TEST_CASE("corners of the worked examples") {
  const CornerProfile p1 = corners(fixtures::l1());
  CHECK(p1.lower == std::vector<Cell>{{2, 2}});
  CHECK(p1.upper == std::vector<Cell>{{3, 2}});
  CHECK(coincidental_corners(p1).empty());

  const CornerProfile p2 = corners(fixtures::l2());
  CHECK(p2.lower == std::vector<Cell>{{4, 2}});
  CHECK(p2.upper == std::vector<Cell>{{2, 4}, {3, 3}});

  CHECK(coincidental_corners(fixtures::l3()) == std::vector<Cell>{{3, 2}});

  const CornerProfile full = corners(Ladder::rectangle(4, 3));
  CHECK(full.lower.empty());
  CHECK(full.upper.empty());
}

TEST_CASE("sentinel corners") {
  const CornerProfile p = corners(fixtures::l1());
  CHECK(p.lower_at(0) == Cell{1, 3});
  CHECK(p.lower_at(1) == Cell{2, 2});
  CHECK(p.lower_at(2) == Cell{5, 1});
  CHECK(p.upper_at(0) == Cell{1, 3});
  CHECK(p.upper_at(2) == Cell{5, 1});
}

TEST_CASE("validate on small cases") {
  const Ladder gapped = parse_ascii("#.#\n#.#");
  CHECK_FALSE(validate(gapped).path_connected);
  CHECK_FALSE(validate(gapped).two_connected);
  CHECK(oracle::two_connected(oracle::cell_set(gapped)));

  const ValidationReport r3 = validate(fixtures::l3());
  CHECK(r3.is_ladder);
  CHECK(r3.every_cell_in_minor);
  CHECK(r3.two_connected);
  CHECK(r3.sidedness == Sidedness::two_sided);

  const ValidationReport rect = validate(Ladder::rectangle(2, 2));
  CHECK(rect.two_connected);
  CHECK(rect.sidedness == Sidedness::matrix);

  // Two 2x2 blocks on the antidiagonal sharing no cell.
  const Ladder apart =
      Ladder::from_cells({{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 1}, {4, 2}});
  const ValidationReport ra = validate(apart);
  CHECK_FALSE(ra.two_connected);
  CHECK_FALSE(ra.path_connected);
  CHECK(ra.sidedness == Sidedness::other);
  CHECK_FALSE(oracle::two_connected(oracle::cell_set(apart)));
  CHECK_THROWS_AS(require_two_connected(apart), DomainError);

  const ValidationReport row = validate(Ladder::rectangle(1, 3));
  CHECK_FALSE(row.every_cell_in_minor);
  CHECK_FALSE(row.two_connected);

  CHECK(validate(fixtures::l1()).sidedness == Sidedness::two_sided);
  const Ladder one_sided = Ladder::from_cells({{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1},
                                               {3, 2}, {3, 3}});
  CHECK(validate(one_sided).sidedness == Sidedness::one_sided);
}

TEST_CASE("antitranspose") {
  const Ladder l2 = fixtures::l2();
  CHECK(antitranspose(antitranspose(l2)) == l2);

  const Ladder t3 = antitranspose(fixtures::l3());
  CHECK(t3.rows() == 3);
  CHECK(t3.cols() == 5);
  CHECK(coincidental_corners(t3) == std::vector<Cell>{{2, 3}});

  // Only lower corners: the antitranspose has only upper corners.
  const Ladder one_sided = Ladder::from_cells({{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1},
                                               {3, 2}, {3, 3}});
  REQUIRE(corners(one_sided).upper.empty());
  const CornerProfile tp = corners(antitranspose(one_sided));
  CHECK(tp.lower.empty());
  CHECK_FALSE(tp.upper.empty());
}

TEST_CASE("compose") {
  const Ladder l3 = fixtures::l3();
  CHECK(compose({Ladder::rectangle(3, 2), Ladder::rectangle(3, 2)}) == l3);
  CHECK(compose({l3}) == l3);

  const Ladder y = compose({Ladder::rectangle(2, 3), Ladder::rectangle(3, 4)});
  CHECK(y.rows() == 4);
  CHECK(y.cols() == 6);
  // Glued at row m_0 = 2 and column n_1 = 4.
  CHECK(coincidental_corners(y) == std::vector<Cell>{{2, 4}});

  const Ladder big = compose({fixtures::l1(), fixtures::l2(), l3});
  CHECK(coincidental_corners(big).size() == 3);

  CHECK_THROWS_AS(compose({}), DomainError);
  // Closure forces (m,1) and (1,n) into every ladder, so every pair glues.
  for (const Ladder& y : gen::all_ladders(3, 3)) {
    CHECK(y.contains(y.rows(), 1));
    CHECK(y.contains(1, y.cols()));
  }
}

TEST_CASE("count_minors") {
  CHECK(count_minors(Ladder::rectangle(2, 2)) == 1);
  CHECK(count_minors(Ladder::rectangle(3, 3)) == 9);
  CHECK(count_minors(fixtures::l3()) == oracle::minors(oracle::cell_set(fixtures::l3())).size());
}

TEST_CASE("property: corners agree with a direct pattern scan") {
  for (const Ladder& y : gen::all_ladders(5, 5)) {
    const auto [lo, up] = oracle::corners(oracle::cell_set(y));
    const CornerProfile p = corners(y);
    REQUIRE(p.lower == lo);
    REQUIRE(p.upper == up);
  }
}

TEST_CASE("property: staircase shapes satisfy the closure axiom") {
  for (const Ladder& y : gen::all_ladders(4, 4)) REQUIRE(oracle::closed(oracle::cell_set(y)));
}

TEST_CASE("property: antitranspose is an involution and swaps corner kinds") {
  for (const Ladder& y : gen::all_ladders(5, 5)) {
    const Ladder t = antitranspose(y);
    REQUIRE(antitranspose(t) == y);
    const CornerProfile p = corners(y), q = corners(t);
    REQUIRE(q.lower == reflect(p.upper, y.rows(), y.cols()));
    REQUIRE(q.upper == reflect(p.lower, y.rows(), y.cols()));
  }
}

TEST_CASE("property: validate's 2-connectedness matches the partition definition") {
  // Staircase ladders with at most 12 cells, plus arbitrary closed subsets of
  // a 3x4 grid. Non-path-connected sets are rejected by validate even when
  // no separating partition exists (e.g. #.#/#.#, a single minor), so there
  // only the forward implication is checked.
  int checked = 0;
  for (const Ladder& y : gen::all_ladders(5, 5)) {
    if (y.size() > 12) continue;
    REQUIRE(validate(y).two_connected == oracle::two_connected(oracle::cell_set(y)));
    ++checked;
  }
  for (std::uint32_t mask = 1; mask < (1u << 12); ++mask) {
    oracle::CellSet s;
    for (int b = 0; b < 12; ++b)
      if (mask >> b & 1u) s.insert({b / 4 + 1, b % 4 + 1});
    if (!oracle::closed(s)) continue;
    const Ladder y = Ladder::from_cells({s.begin(), s.end()});
    INFO(render_ascii(y));
    const ValidationReport r = validate(y);
    if (r.two_connected) REQUIRE(oracle::two_connected(oracle::cell_set(y)));
    if (r.path_connected)
      REQUIRE(r.two_connected == oracle::two_connected(oracle::cell_set(y)));
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("property: compose sizes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int len = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Ladder> fs;
    int rows = 0, cols = 0;
    for (int i = 0; i < len; ++i) {
      fs.push_back(gen::random_ladder(rng, 5, 5));
      rows += fs.back().rows();
      cols += fs.back().cols();
    }
    const Ladder y = compose(fs);
    REQUIRE(y.rows() == rows - (len - 1));
    REQUIRE(y.cols() == cols - (len - 1));
    REQUIRE(oracle::closed(oracle::cell_set(y)));
  }
}
