#include <doctest.h>

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ncploc/correspondence.hpp"
#include "ncploc/json_io.hpp"

using namespace ncploc;
using nlohmann::json;

TEST_CASE("interval wire format") {
  CHECK(to_json(Interval(1, 2)).dump() == "[1,2]");
  CHECK(interval_from_json(json::parse("[3,5]")) == Interval(3, 5));

  CHECK_THROWS_AS(interval_from_json(json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(interval_from_json(json::parse("[1]")), std::invalid_argument);
  CHECK_THROWS_AS(interval_from_json(json::parse("[1,2,3]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(interval_from_json(json::parse("[1,\"2\"]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(interval_from_json(json::parse("[0,1]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(interval_from_json(json::parse("[3,2]")),
                  std::invalid_argument);
}

TEST_CASE("box wire format") {
  Space space(2);
  Box b = maximal_box(space, Interval(1, 1));
  CHECK(to_json(b) ==
        json::parse(R"({"base":[1,1],"members":[[[1,1],0],[[2,2],1]]})"));
}

TEST_CASE("p-local tuple wire format") {
  Space space(2);
  PLocalTuple t(space, 0b011);  // {[1,1],[1,2]}
  json doc = to_json(t);
  CHECK(doc == json::parse(R"({"n":2,"support":[[1,1],[1,2]]})"));
  CHECK(plocal_from_json(doc) == t);
}

TEST_CASE("p-local tuples round trip, valid or not") {
  for (int n = 1; n <= 3; ++n) {
    Space space(n);
    std::uint64_t full = (std::uint64_t{1} << space.interval_count()) - 1;
    for (std::uint64_t bits = 0; bits <= full; ++bits) {
      PLocalTuple t(space, bits);
      CHECK(plocal_from_json(to_json(t)) == t);
    }
  }
}

TEST_CASE("p-local tuple parse errors") {
  CHECK_THROWS_AS(plocal_from_json(json::parse(R"({"support":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(plocal_from_json(json::parse(R"({"n":0,"support":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(plocal_from_json(json::parse(R"({"n":2.5,"support":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(plocal_from_json(json::parse(R"({"n":2})")),
                  std::invalid_argument);
  // interval sticking out of the space
  CHECK_THROWS_AS(plocal_from_json(json::parse(R"({"n":2,"support":[[1,3]]})")),
                  std::invalid_argument);
  // listed twice
  CHECK_THROWS_AS(
      plocal_from_json(json::parse(R"({"n":2,"support":[[1,1],[1,1]]})")),
      std::invalid_argument);
}

TEST_CASE("interval keys") {
  CHECK(interval_key(Interval(1, 2)) == "1-2");
  CHECK(interval_from_key("1-2") == Interval(1, 2));
  CHECK(interval_from_key("10-12") == Interval(10, 12));

  for (const char* bad : {"", "12", "1-", "-2", "a-b", "1-2x", "x1-2", "0-1",
                          "3-2", "1 -2"}) {
    CHECK_THROWS_AS(interval_from_key(bad), std::invalid_argument);
  }
}

TEST_CASE("support tuple wire format") {
  Space space(2);
  std::vector<PrimeLabel> universe{PrimeLabel(2), PrimeLabel(3)};
  // slice for 2: {[1,1],[1,2]}; slice for 3: {[1,2],[2,2]}
  SupportTuple t(space, universe, {0b011, 0b110});
  json doc = to_json(t);
  CHECK(doc == json::parse(R"({
    "n": 2,
    "universe": [2, 3],
    "sets": {"1-1": [2], "1-2": [2, 3], "2-2": [3]}
  })"));
  SupportTuple back = support_from_json(doc);
  CHECK(back.universe() == t.universe());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    CHECK(back.slice(i) == t.slice(i));
  }
}

TEST_CASE("support tuple parsing fills in omitted sets") {
  json doc = json::parse(R"({"n":2,"universe":[0,5],"sets":{"1-2":[5]}})");
  SupportTuple t = support_from_json(doc);
  CHECK(t.slice(0).bits() == 0);      // nothing mentions 0
  CHECK(t.slice(1).bits() == 0b010);  // 5 sits on [1,2] only
}

TEST_CASE("support tuple parse errors") {
  CHECK_THROWS_AS(support_from_json(json::parse(R"({"n":2,"sets":{}})")),
                  std::invalid_argument);
  // 4 is neither 0 nor a prime
  CHECK_THROWS_AS(
      support_from_json(json::parse(R"({"n":2,"universe":[4],"sets":{}})")),
      std::invalid_argument);
  // universe must be strictly increasing
  CHECK_THROWS_AS(
      support_from_json(json::parse(R"({"n":2,"universe":[3,2],"sets":{}})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      support_from_json(json::parse(R"({"n":2,"universe":[2,2],"sets":{}})")),
      std::invalid_argument);
  // interval key outside the space
  CHECK_THROWS_AS(
      support_from_json(
          json::parse(R"({"n":2,"universe":[2],"sets":{"1-3":[2]}})")),
      std::invalid_argument);
  // prime not in the universe
  CHECK_THROWS_AS(
      support_from_json(
          json::parse(R"({"n":2,"universe":[2],"sets":{"1-1":[3]}})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      support_from_json(
          json::parse(R"({"n":2,"universe":[2],"sets":{"1-1":2}})")),
      std::invalid_argument);
  CHECK_THROWS_AS(support_from_json(json::parse(R"({"n":2,"universe":[2]})")),
                  std::invalid_argument);
}

TEST_CASE("support tuples round trip across a product enumeration") {
  Space space(2);
  std::vector<PrimeLabel> universe{PrimeLabel(0), PrimeLabel(2), PrimeLabel(7)};
  for (const SupportTuple& t :
       enumerate_valid_support_tuples(space, universe)) {
    SupportTuple back = support_from_json(to_json(t));
    CHECK(back.universe() == t.universe());
    for (std::size_t i = 0; i < universe.size(); ++i) {
      CHECK(back.slice(i) == t.slice(i));
    }
  }
}

TEST_CASE("partition wire format") {
  auto p = NoncrossingPartition::from_blocks(3, {{1, 2}, {3}});
  json doc = to_json(p);
  CHECK(doc == json::parse(R"({"k":3,"blocks":[[1,2],[3]]})"));
  CHECK(ncp_from_json(doc) == p);

  // non-canonical block order normalizes on the way in
  CHECK(ncp_from_json(json::parse(R"({"k":3,"blocks":[[3],[2,1]]})")) == p);

  CHECK_THROWS_AS(ncp_from_json(json::parse(R"({"blocks":[[1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ncp_from_json(json::parse(R"({"k":1,"blocks":1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ncp_from_json(json::parse(R"({"k":2,"blocks":[1,2]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ncp_from_json(json::parse(R"({"k":2,"blocks":[["x"]]})")),
                  std::invalid_argument);
  // crossing
  CHECK_THROWS_AS(
      ncp_from_json(json::parse(R"({"k":4,"blocks":[[1,3],[2,4]]})")),
      std::invalid_argument);
}

TEST_CASE("partitions round trip") {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& p : enumerate_ncp(k)) {
      CHECK(ncp_from_json(to_json(p)) == p);
    }
  }
}

TEST_CASE("lattice adjacency document") {
  auto l = plocal_lattice(Space(2));
  json doc = lattice_to_json(l);
  CHECK(doc == json::parse(R"({
    "elements": [
      {"n": 2, "support": []},
      {"n": 2, "support": [[1,1],[1,2]]},
      {"n": 2, "support": [[1,1],[2,2]]},
      {"n": 2, "support": [[1,2],[2,2]]},
      {"n": 2, "support": [[1,1],[1,2],[2,2]]}
    ],
    "covers": [[0,1],[0,2],[0,3],[1,4],[2,4],[3,4]]
  })"));
}

TEST_CASE("lattice documents keep plain-string keys as strings") {
  auto l = FiniteLattice::from_order(
      {"lo", "hi"}, [](std::size_t i, std::size_t j) { return i <= j; });
  json doc = lattice_to_json(l);
  CHECK(doc["elements"] == json::parse(R"(["lo","hi"])"));
  CHECK(doc["covers"] == json::parse("[[0,1]]"));
}
