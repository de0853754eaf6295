#include <doctest.h>

#include <random>

#include "ladder/decompose.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/predicates.hpp"

using namespace ladder;

TEST_CASE("L_3 splits into two 3x2 matrices at (3,2)") {
  const Factorization f = decompose(fixtures::l3());
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == Ladder::rectangle(3, 2));
  CHECK(f.factors[1] == Ladder::rectangle(3, 2));
  CHECK(f.coincidental == std::vector<Cell>{{3, 2}});
  CHECK(f.w() == 1);
  // Z_0 occupies rows 1..3, columns 2..3; Z_1 rows 3..5, columns 1..2.
  CHECK(f.offsets[0] == Offset{0, 1});
  CHECK(f.offsets[1] == Offset{2, 0});
  CHECK(f.offsets[0].apply({3, 1}) == Cell{3, 2});
  CHECK(f.offsets[1].apply({1, 2}) == Cell{3, 2});
}

TEST_CASE("a ladder without coincidental corners is its own factor") {
  const Factorization f = decompose(fixtures::l1());
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == fixtures::l1());
  CHECK(f.coincidental.empty());
  CHECK(f.offsets[0] == Offset{0, 0});
}

TEST_CASE("four-factor round trip") {
  const std::vector<Ladder> list = {fixtures::l1(), fixtures::l2(), Ladder::rectangle(3, 2),
                                    Ladder::rectangle(3, 2)};
  const Factorization f = decompose(compose(list));
  CHECK(f.factors == list);
  CHECK(f.w() == 3);
  CHECK(factorization_roundtrip_check(list));
  CHECK(factorization_roundtrip_check({Ladder::rectangle(3, 2), Ladder::rectangle(3, 2)}));
  CHECK(factorization_roundtrip_check({fixtures::l1()}));
}

TEST_CASE("decompose rejects ladders that are not 2-connected") {
  CHECK_THROWS_AS(decompose(Ladder::rectangle(1, 4)), DomainError);
  CHECK_THROWS_AS(decompose(Ladder::from_cells({{1, 2}, {2, 1}})), DomainError);
}

TEST_CASE("property: decompose inverts compose on coincidental-free factors") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int len = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Ladder> list;
    for (int i = 0; i < len; ++i)
      list.push_back(gen::random_ladder_where(rng, 6, 6, pred::factor_like, 2, 2));
    const Ladder y = compose(list);
    const Factorization f = decompose(y);
    REQUIRE(f.factors == list);
    REQUIRE(f.w() == len - 1);

    // Corner bookkeeping: each coincidental corner is a lower and an upper
    // corner of Y and a corner of no factor.
    const CornerProfile p = corners(y);
    int h = 0, k = 0;
    for (const CornerProfile& q : f.per_factor_corners) {
      h += q.h();
      k += q.k();
    }
    REQUIRE(h + f.w() == p.h());
    REQUIRE(k + f.w() == p.k());

    // Union of translated factors is Y, consecutive factors share one cell.
    std::set<Cell> all;
    std::size_t total = 0;
    for (std::size_t u = 0; u < list.size(); ++u) {
      REQUIRE(pred::two_connected(f.factors[u]));
      for (const Cell& c : f.factors[u].cells()) all.insert(f.offsets[u].apply(c));
      total += f.factors[u].size();
    }
    REQUIRE(all.size() == y.size());
    REQUIRE(total == y.size() + f.w());
  }
}

TEST_CASE("property: every 2-connected ladder within 5x5 decomposes") {
  for (const Ladder& y : gen::all_ladders(5, 5)) {
    if (!pred::two_connected(y)) continue;
    const Factorization f = decompose(y);
    REQUIRE(compose(f.factors) == y);
    for (const Ladder& z : f.factors) REQUIRE(pred::factor_like(z));
  }
}
