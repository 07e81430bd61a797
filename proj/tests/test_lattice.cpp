#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ncploc/errors.hpp"
#include "ncploc/lattice.hpp"

using namespace ncploc;

namespace {

// Build a lattice from its strict comparabilities (already transitively
// closed by the caller).
FiniteLattice make(std::vector<std::string> keys,
                   std::set<std::pair<std::string, std::string>> less) {
  auto names = keys;
  return FiniteLattice::from_order(
      std::move(keys), [names, less](std::size_t i, std::size_t j) {
        return i == j || less.count({names[i], names[j]}) > 0;
      });
}

FiniteLattice chain(std::size_t n) {
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < n; ++i) keys.push_back("c" + std::to_string(i));
  return FiniteLattice::from_order(
      std::move(keys), [](std::size_t i, std::size_t j) { return i <= j; });
}

FiniteLattice diamond_m3() {
  return make({"0", "a", "b", "c", "1"},
              {{"0", "a"},
               {"0", "b"},
               {"0", "c"},
               {"0", "1"},
               {"a", "1"},
               {"b", "1"},
               {"c", "1"}});
}

FiniteLattice pentagon_n5() {
  return make({"0", "a", "b", "c", "1"},
              {{"0", "a"},
               {"0", "b"},
               {"0", "c"},
               {"0", "1"},
               {"a", "b"},
               {"a", "1"},
               {"b", "1"},
               {"c", "1"}});
}

// 0 < {a,b} < c < d < 1; not self-dual (one level doubled near the bottom).
FiniteLattice doubled_level_chain() {
  return make({"0", "a", "b", "c", "d", "1"},
              {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"}, {"0", "1"},
               {"a", "c"}, {"a", "d"}, {"a", "1"},
               {"b", "c"}, {"b", "d"}, {"b", "1"},
               {"c", "d"}, {"c", "1"},
               {"d", "1"}});
}

// 0 < a < {b,c} < 1; also not self-dual (one atom, two coatoms).
FiniteLattice kite() {
  return make({"0", "a", "b", "c", "1"},
              {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "1"},
               {"a", "b"}, {"a", "c"}, {"a", "1"},
               {"b", "1"}, {"c", "1"}});
}

}  // namespace

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(FiniteLattice::from_order({}, [](std::size_t, std::size_t) {
                    return true;
                  }),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteLattice::from_order({"x", "x"},
                                            [](std::size_t i, std::size_t j) {
                                              return i <= j;
                                            }),
                  std::invalid_argument);
  // not reflexive
  CHECK_THROWS_AS(FiniteLattice::from_order({"x", "y"},
                                            [](std::size_t i, std::size_t j) {
                                              return i < j;
                                            }),
                  std::invalid_argument);
  // not antisymmetric
  CHECK_THROWS_AS(FiniteLattice::from_order({"x", "y"},
                                            [](std::size_t, std::size_t) {
                                              return true;
                                            }),
                  std::invalid_argument);
  // not transitive: 0<1, 1<2, but 0 and 2 incomparable
  CHECK_THROWS_AS(FiniteLattice::from_order(
                      {"x", "y", "z"},
                      [](std::size_t i, std::size_t j) {
                        return i == j || (i == 0 && j == 1) || (i == 1 && j == 2);
                      }),
                  std::invalid_argument);
}

TEST_CASE("a bare antichain is not a lattice and names a witness") {
  try {
    FiniteLattice::from_order({"x", "y"}, [](std::size_t i, std::size_t j) {
      return i == j;
    });
    FAIL("expected NotALatticeError");
  } catch (const NotALatticeError& e) {
    CHECK(((e.x == 0 && e.y == 1) || (e.x == 1 && e.y == 0)));
  }
}

TEST_CASE("missing joins are reported too") {
  // bottom plus two maximal elements: meets exist, the top join does not
  try {
    make({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
    FAIL("expected NotALatticeError");
  } catch (const NotALatticeError& e) {
    CHECK(e.missing_join);
    std::set<std::size_t> pair{e.x, e.y};
    CHECK(pair == std::set<std::size_t>{1, 2});
  }
}

TEST_CASE("one-element lattice") {
  auto l = chain(1);
  CHECK(l.size() == 1);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 0);
  CHECK(l.hasse_edges().empty());
  CHECK(l.is_distributive());
  CHECK(is_self_dual(l));
}

TEST_CASE("chains") {
  auto l = chain(4);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 3);
  CHECK(l.meet(1, 2) == 1);
  CHECK(l.join(1, 2) == 2);
  CHECK(l.hasse_edges() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(l.heights() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(l.is_distributive());
  CHECK(is_self_dual(l));
}

TEST_CASE("the diamond") {
  auto l = diamond_m3();
  CHECK(l.size() == 5);
  CHECK(l.bottom() == *l.index_of("0"));
  CHECK(l.top() == *l.index_of("1"));
  auto a = *l.index_of("a"), b = *l.index_of("b"), c = *l.index_of("c");
  CHECK(l.meet(a, b) == l.bottom());
  CHECK(l.join(a, c) == l.top());
  CHECK(l.hasse_edges().size() == 6);

  auto w = l.distributivity_witness();
  REQUIRE(w.has_value());
  // lexicographically first failing triple: a /\ (b \/ c) vs (a/\b) \/ (a/\c)
  CHECK(w->x == a);
  CHECK(w->y == b);
  CHECK(w->z == c);
  CHECK(is_self_dual(l));
}

TEST_CASE("the pentagon") {
  auto l = pentagon_n5();
  auto a = *l.index_of("a"), b = *l.index_of("b"), c = *l.index_of("c");
  CHECK(l.meet(b, c) == l.bottom());
  CHECK(l.join(a, c) == l.top());
  CHECK(l.leq(a, b));
  CHECK_FALSE(l.leq(a, c));
  CHECK_FALSE(l.is_distributive());
  auto w = l.distributivity_witness();
  REQUIRE(w.has_value());
  std::size_t lhs = l.meet(w->x, l.join(w->y, w->z));
  std::size_t rhs = l.join(l.meet(w->x, w->y), l.meet(w->x, w->z));
  CHECK(lhs != rhs);
  CHECK(is_self_dual(l));
}

TEST_CASE("self-duality fails once a level is doubled") {
  CHECK_FALSE(is_self_dual(doubled_level_chain()));
  CHECK_FALSE(is_self_dual(kite()));
}

TEST_CASE("duality is an involution") {
  for (const FiniteLattice& l :
       {chain(3), diamond_m3(), pentagon_n5(), doubled_level_chain()}) {
    auto d = l.dual();
    CHECK(d.bottom() == l.top());
    CHECK(d.top() == l.bottom());
    auto dd = d.dual();
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = 0; j < l.size(); ++j) {
        CHECK(dd.leq(i, j) == l.leq(i, j));
      }
    }
  }
}

TEST_CASE("hasse edges regenerate the order") {
  for (const FiniteLattice& l :
       {diamond_m3(), pentagon_n5(), doubled_level_chain(), kite()}) {
    std::size_t n = l.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = 1;
    auto edges = l.hasse_edges();
    for (std::size_t round = 0; round < n; ++round) {
      for (auto [lo, hi] : edges) {
        for (std::size_t j = 0; j < n; ++j) {
          if (reach[hi][j]) reach[lo][j] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(static_cast<bool>(reach[i][j]) == l.leq(i, j));
      }
    }
  }
}

TEST_CASE("meet and join laws") {
  for (const FiniteLattice& l :
       {chain(5), diamond_m3(), pentagon_n5(), doubled_level_chain()}) {
    for (std::size_t x = 0; x < l.size(); ++x) {
      for (std::size_t y = 0; y < l.size(); ++y) {
        CHECK(l.meet(x, y) == l.meet(y, x));
        CHECK(l.join(x, y) == l.join(y, x));
        CHECK(l.meet(x, l.join(x, y)) == x);
        CHECK(l.join(x, l.meet(x, y)) == x);
        CHECK(l.leq(l.meet(x, y), x));
        CHECK(l.leq(x, l.join(x, y)));
        if (l.leq(x, y)) {
          CHECK(l.meet(x, y) == x);
          CHECK(l.join(x, y) == y);
        }
      }
    }
  }
}

TEST_CASE("products") {
  auto square = direct_product(chain(2), chain(2));
  CHECK(square.size() == 4);
  CHECK(square.hasse_edges().size() == 4);
  CHECK(square.is_distributive());
  CHECK(is_self_dual(square));

  auto tall = direct_product(chain(4), chain(1));
  auto iso = are_isomorphic(tall, chain(4));
  REQUIRE(iso.has_value());
  CHECK(*iso == std::vector<std::size_t>{0, 1, 2, 3});

  CHECK_FALSE(are_isomorphic(square, chain(4)).has_value());
}

TEST_CASE("isomorphism finds a relabelling of the diamond") {
  auto l = diamond_m3();
  auto relabeled = make({"bot", "q", "r", "s", "top"},
                        {{"bot", "q"},
                         {"bot", "r"},
                         {"bot", "s"},
                         {"bot", "top"},
                         {"q", "top"},
                         {"r", "top"},
                         {"s", "top"}});
  auto iso = are_isomorphic(l, relabeled);
  REQUIRE(iso.has_value());
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      CHECK(l.leq(i, j) == relabeled.leq((*iso)[i], (*iso)[j]));
    }
  }
  // deterministic: first extension in element order
  CHECK(*iso == std::vector<std::size_t>{0, 1, 2, 3, 4});

  CHECK_FALSE(are_isomorphic(l, pentagon_n5()).has_value());
  CHECK_THROWS_AS(are_isomorphic(l, relabeled, 3), BudgetError);
}

TEST_CASE("dot rendering walks the diagram") {
  auto l = diamond_m3();
  std::string dot = to_dot(l);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') ==
        static_cast<long>(l.hasse_edges().size()));
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("\"0\"") != std::string::npos);
}
