#include <doctest.h>

#include <algorithm>

#include "ncploc/errors.hpp"
#include "ncploc/ncp.hpp"
#include "ncploc/supports.hpp"

using namespace ncploc;

namespace {

PLocalTuple tuple_of(const Space& s, std::initializer_list<Interval> ys) {
  return PLocalTuple::from_support(s, std::vector<Interval>(ys));
}

}  // namespace

TEST_CASE("prime labels") {
  CHECK(PrimeLabel(0).value() == 0);
  CHECK(PrimeLabel(2).value() == 2);
  CHECK(PrimeLabel(97).value() == 97);
  CHECK_THROWS_AS(PrimeLabel(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeLabel(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeLabel(-2), std::invalid_argument);
  CHECK(PrimeLabel(0) < PrimeLabel(2));
}

TEST_CASE("tuple representation") {
  Space s(2);
  PLocalTuple t = tuple_of(s, {Interval(1, 1), Interval(2, 2)});
  CHECK(t.bits() == 0b101);
  CHECK(t.test(Interval(1, 1)));
  CHECK_FALSE(t.test(Interval(1, 2)));
  CHECK(t.support() == std::vector<Interval>{{1, 1}, {2, 2}});

  CHECK_THROWS_AS(PLocalTuple(s, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(PLocalTuple(Space(11), 0), BudgetError);
}

TEST_CASE("validity over two points") {
  Space s(2);
  CHECK(is_valid_plocal(PLocalTuple(s, 0)));
  CHECK(is_valid_plocal(tuple_of(s, {Interval(1, 1), Interval(2, 2)})));
  CHECK(is_valid_plocal(tuple_of(s, {Interval(1, 1), Interval(1, 2)})));
  CHECK(is_valid_plocal(tuple_of(s, {Interval(1, 2), Interval(2, 2)})));
  CHECK(is_valid_plocal(PLocalTuple(s, 0b111)));

  CHECK_FALSE(is_valid_plocal(tuple_of(s, {Interval(1, 1)})));
  CHECK_FALSE(is_valid_plocal(tuple_of(s, {Interval(1, 2)})));
  CHECK_FALSE(is_valid_plocal(tuple_of(s, {Interval(2, 2)})));
}

TEST_CASE("enumeration over two points, frozen list") {
  auto valid = enumerate_valid_plocal(Space(2));
  REQUIRE(valid.size() == 5);
  CHECK(valid[0].bits() == 0b000);
  CHECK(valid[1].bits() == 0b011);  // {[1,1],[1,2]}
  CHECK(valid[2].bits() == 0b101);  // {[1,1],[2,2]}
  CHECK(valid[3].bits() == 0b110);  // {[1,2],[2,2]}
  CHECK(valid[4].bits() == 0b111);
}

TEST_CASE("counts follow the catalan numbers") {
  // C_{n+1} for n = 1..6
  std::vector<std::size_t> expect{2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 6; ++n) {
    auto valid = enumerate_valid_plocal(Space(n));
    CHECK(valid.size() == expect[static_cast<std::size_t>(n) - 1]);
    CHECK(catalan(n + 1) == valid.size());
    CHECK(std::is_sorted(valid.begin(), valid.end()));
  }
  CHECK_THROWS_AS(enumerate_valid_plocal(Space(9)), BudgetError);
  CHECK(enumerate_valid_plocal(Space(8)).size() == 4862);
  CHECK(enumerate_valid_plocal(Space(9), 9).size() == 16796);
}

TEST_CASE("structural enumeration equals the brute-force oracle") {
  for (int n = 1; n <= 4; ++n) {
    auto fast = enumerate_valid_plocal(Space(n));
    auto oracle = brute_force_valid_plocal(Space(n));
    REQUIRE(fast.size() == oracle.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == oracle[i]);
  }
  CHECK_THROWS_AS(brute_force_valid_plocal(Space(5), 14), BudgetError);
}

TEST_CASE("pointwise form of validity agrees with the closure form") {
  for (int n = 1; n <= 4; ++n) {
    Space s(n);
    std::uint64_t end = std::uint64_t{1} << s.interval_count();
    for (std::uint64_t bits = 0; bits < end; ++bits) {
      PLocalTuple t(s, bits);
      CHECK(is_valid_plocal(t) == is_valid_plocal_factored(t));
    }
  }
}

TEST_CASE("generated tuples over two points") {
  Space s(2);
  CHECK(tuple_from_generators(s, {}).bits() == 0);
  CHECK(tuple_from_generators(s, {Interval(1, 2)}).bits() == 0b011);
  CHECK(tuple_from_generators(s, {Interval(1, 1)}).bits() == 0b101);
  CHECK(tuple_from_generators(s, {Interval(2, 2)}).bits() == 0b110);
  CHECK(tuple_from_generators(s, {Interval(1, 1), Interval(1, 2)}).bits() ==
        0b111);
}

TEST_CASE("every generated tuple is valid") {
  for (int n = 1; n <= 3; ++n) {
    Space s(n);
    auto all = enumerate_intervals(s);
    std::uint64_t end = std::uint64_t{1} << all.size();
    for (std::uint64_t pickset = 0; pickset < end; ++pickset) {
      std::vector<Interval> gens;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((pickset >> i) & 1) gens.push_back(all[i]);
      }
      CHECK(is_valid_plocal(tuple_from_generators(s, gens)));
    }
  }
}

TEST_CASE("generator sets over two points") {
  Space s(2);
  CHECK(generator_set(PLocalTuple(s, 0b111)) ==
        std::vector<Interval>{{1, 1}, {1, 2}, {2, 2}});
  CHECK(generator_set(PLocalTuple(s, 0b101)) ==
        std::vector<Interval>{{1, 1}});
  CHECK(generator_set(PLocalTuple(s, 0)).empty());
}

TEST_CASE("generator and support maps invert each other on valid tuples") {
  for (int n = 1; n <= 4; ++n) {
    Space s(n);
    for (const PLocalTuple& t : enumerate_valid_plocal(s)) {
      CHECK(support_from_generators(s, generator_set(t)) == t);
    }
  }
}

TEST_CASE("closure, meet and join") {
  Space s(2);
  CHECK(valid_closure(s, 0b001).bits() == 0);       // {[1,1]} alone collapses
  CHECK(valid_closure(s, 0b011).bits() == 0b011);   // already a box
  CHECK(valid_closure(s, 0b111).bits() == 0b111);

  PLocalTuple left(s, 0b011), right(s, 0b101);
  CHECK(tuple_join(left, right).bits() == 0b111);
  CHECK(tuple_meet(left, right).bits() == 0);  // intersection {[1,1]} closes down

  CHECK_THROWS_AS(tuple_join(left, PLocalTuple(Space(3), 0)),
                  std::invalid_argument);
}

TEST_CASE("meet is the largest valid tuple below the intersection") {
  for (int n = 1; n <= 4; ++n) {
    Space s(n);
    auto valid = enumerate_valid_plocal(s);
    for (const PLocalTuple& x : valid) {
      for (const PLocalTuple& y : valid) {
        PLocalTuple m = tuple_meet(x, y);
        CHECK(is_valid_plocal(m));
        CHECK((m.bits() & ~(x.bits() & y.bits())) == 0);
        for (const PLocalTuple& z : valid) {
          if ((z.bits() & ~(x.bits() & y.bits())) == 0) {
            CHECK((z.bits() & ~m.bits()) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("support tuples slice per prime") {
  Space s(2);
  std::vector<PrimeLabel> universe{PrimeLabel(2), PrimeLabel(3)};
  SupportTuple t(s, universe, {0b011, 0b101});
  CHECK(t.slice(0).bits() == 0b011);
  CHECK(t.slice(1).bits() == 0b101);
  CHECK(t.set_of(Interval(1, 1)) ==
        std::vector<PrimeLabel>{PrimeLabel(2), PrimeLabel(3)});
  CHECK(t.set_of(Interval(1, 2)) == std::vector<PrimeLabel>{PrimeLabel(2)});
  CHECK(t.set_of(Interval(2, 2)) == std::vector<PrimeLabel>{PrimeLabel(3)});
  CHECK(is_valid(t));

  SupportTuple skew(s, universe, {0b001, 0b101});
  CHECK_FALSE(is_valid(skew));

  CHECK_THROWS_AS(SupportTuple(s, {PrimeLabel(3), PrimeLabel(2)}, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SupportTuple(s, universe, {0}), std::invalid_argument);
  CHECK_THROWS_AS(SupportTuple(s, {}, {}), std::invalid_argument);
}

TEST_CASE("spectrum sets") {
  auto all = SpectrumSet::all_primes();
  CHECK(all.kind() == SpectrumSet::Kind::all);
  CHECK(all.contains(PrimeLabel(7)));
  CHECK_FALSE(all.contains(PrimeLabel(0)));

  auto fin = SpectrumSet::finite({PrimeLabel(3), PrimeLabel(2), PrimeLabel(3)});
  CHECK(fin.labels() == std::vector<PrimeLabel>{PrimeLabel(2), PrimeLabel(3)});
  CHECK(fin.contains(PrimeLabel(2)));
  CHECK_FALSE(fin.contains(PrimeLabel(5)));
}

TEST_CASE("group supports") {
  // Z
  CHECK(supp_of_group(FgGroup(1, {}, 0)) == SpectrumSet::all_primes());
  // Z + Z/4
  CHECK(supp_of_group(FgGroup(1, {{2, 2}}, 0)) == SpectrumSet::all_primes());
  // 0
  CHECK(supp_of_group(FgGroup(0, {}, 0)) == SpectrumSet::finite({}));
  // Z/4
  CHECK(supp_of_group(FgGroup(0, {{2, 2}}, 0)) ==
        SpectrumSet::finite({PrimeLabel(2)}));
  // Z/12 = Z/4 + Z/3
  CHECK(supp_of_group(FgGroup(0, {{2, 2}, {3, 1}}, 0)) ==
        SpectrumSet::finite({PrimeLabel(2), PrimeLabel(3)}));
  // Q
  CHECK(supp_of_group(FgGroup(0, {}, 1)) == SpectrumSet::finite({PrimeLabel(0)}));
  // Q + Z/9
  CHECK(supp_of_group(FgGroup(0, {{3, 2}}, 1)) ==
        SpectrumSet::finite({PrimeLabel(0), PrimeLabel(3)}));

  CHECK_THROWS_AS(FgGroup(-1, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(FgGroup(0, {{4, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(FgGroup(0, {{2, 0}}, 0), std::invalid_argument);
}

TEST_CASE("support of a direct sum is the union of supports") {
  auto combine = [](const FgGroup& g, const FgGroup& h) {
    std::vector<PrimePower> torsion = g.torsion();
    torsion.insert(torsion.end(), h.torsion().begin(), h.torsion().end());
    return FgGroup(g.free_rank() + h.free_rank(), std::move(torsion),
                   g.rational_rank() + h.rational_rank());
  };
  std::vector<FgGroup> pool{
      FgGroup(0, {}, 0),        FgGroup(1, {}, 0),
      FgGroup(0, {{2, 1}}, 0),  FgGroup(0, {{3, 2}, {5, 1}}, 0),
      FgGroup(0, {}, 1),        FgGroup(2, {{7, 1}}, 1),
  };
  for (const FgGroup& g : pool) {
    for (const FgGroup& h : pool) {
      auto joint = supp_of_group(combine(g, h));
      auto sg = supp_of_group(g), sh = supp_of_group(h);
      if (sg.kind() == SpectrumSet::Kind::all ||
          sh.kind() == SpectrumSet::Kind::all) {
        CHECK(joint.kind() == SpectrumSet::Kind::all);
      } else {
        std::vector<PrimeLabel> both = sg.labels();
        both.insert(both.end(), sh.labels().begin(), sh.labels().end());
        CHECK(joint == SpectrumSet::finite(both));
      }
    }
  }
}
