#include <doctest.h>

#include "ladder/io.hpp"
#include "support/fixtures.hpp"

using namespace ladder;

TEST_CASE("JSON ladders") {
  const Ladder y = parse_json(
      R"({"cells":[[1,2],[1,3],[2,2],[2,3],[3,1],[3,2],[3,3],[4,1],[4,2],[5,1],[5,2]]})");
  CHECK(y == fixtures::l3());
  CHECK(parse_json(R"({"cells":[[1,1]]})").size() == 1);
  CHECK_THROWS_AS(parse_json(R"({"cells":[[1,1],[2,2]]})"), DomainError);

  std::vector<std::string> warnings;
  const Ladder d = parse_json(R"({"cells":[[1,1],[1,1],[1,2]]})", &warnings);
  CHECK(d.size() == 2);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("duplicate") != std::string::npos);

  CHECK_THROWS_AS(parse_json("{"), FormatError);
  CHECK_THROWS_AS(parse_json(R"({"cell":[]})"), FormatError);
  CHECK_THROWS_AS(parse_json(R"({"cells":[[1]]})"), FormatError);
  CHECK_THROWS_AS(parse_json(R"({"cells":[[0,1]]})"), FormatError);
  CHECK_THROWS_AS(parse_json(R"({"cells":[["1",1]]})"), FormatError);
  CHECK_THROWS_AS(parse_json(R"({"cells":[]})"), DomainError);
}

TEST_CASE("ASCII ladders") {
  CHECK(parse_ascii(".##\n.##\n###\n##.\n##.") == fixtures::l3());
  CHECK(parse_ascii("##\n##") == Ladder::rectangle(2, 2));
  CHECK(parse_ascii("\n\n##  \r\n##\n\n") == Ladder::rectangle(2, 2));
  CHECK_THROWS_AS(parse_ascii("#.\n.#"), DomainError);
  CHECK_THROWS_AS(parse_ascii("##\n\n##"), FormatError);
  CHECK_THROWS_AS(parse_ascii("#x"), FormatError);
  CHECK_THROWS_AS(parse_ascii(""), FormatError);
  CHECK_THROWS_AS(parse_ascii("...\n..."), FormatError);
}

TEST_CASE("format detection") {
  CHECK(parse_ladder("  {\"cells\":[[1,1]]}") == Ladder::rectangle(1, 1));
  CHECK(parse_ladder("#") == Ladder::rectangle(1, 1));
}

TEST_CASE("rendering") {
  CHECK(render_ascii(Ladder::rectangle(1, 1)) == "#");
  CHECK(render_ascii(fixtures::l3(), true) == ".##\n.##\n#C#\n##.\n##.");
  CHECK(render_ascii(fixtures::l2(), true) == ".####\n.##U#\n.#U#.\n#L#..\n###..");
  CHECK(parse_ascii(render_ascii(fixtures::l2())) == fixtures::l2());
}

TEST_CASE("monomial JSON") {
  const Monomial m = parse_monomial(R"({"exps":[[1,3,1],[3,2,2],[1,3,0]]})");
  CHECK(m == Monomial{{{1, 3}, 1}, {{3, 2}, 2}});
  CHECK(to_json(m).dump() == R"({"exps":[[1,3,1],[3,2,2]]})");
  CHECK_THROWS_AS(parse_monomial(R"({"exps":[[1,3]]})"), FormatError);
  CHECK_THROWS_AS(parse_monomial(R"({"exps":[[1,3,-1]]})"), FormatError);
  CHECK_THROWS_AS(parse_monomial("[]"), FormatError);
}

TEST_CASE("JSON output keys are sorted") {
  const auto j = to_json(classify(fixtures::l3()));
  CHECK(j.dump().rfind(R"({"classes":)", 0) == 0);
  CHECK(j["count"] == 4);
  CHECK(j["omega"].dump() == R"({"P":{"1":1},"Q":{"1":1,"2":1}})");
  CHECK(to_json(corners(fixtures::l1())).dump() ==
        R"({"coincidental":[],"lower":[[2,2]],"m":5,"n":3,"upper":[[3,2]]})");
}
