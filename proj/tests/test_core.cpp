#include <algorithm>

#include "doctest.h"
#include "hombax/core.hpp"

using namespace hombax;

TEST_CASE("compose") {
  CHECK(compose(FiniteMap::identity(3), FiniteMap::identity(3)) == FiniteMap::identity(3));
  CHECK(compose(FiniteMap({1, 0}), FiniteMap({1, 0})) == FiniteMap({0, 1}));
  CHECK(compose(FiniteMap::constant(4, 0), FiniteMap({3, 1, 2, 2})) == FiniteMap::constant(4, 0));
  // f(g(x)), not g(f(x))
  CHECK(compose(FiniteMap({1, 2, 0}), FiniteMap({0, 0, 1})) == FiniteMap({1, 1, 2}));
  CHECK_THROWS_AS(compose(FiniteMap({0}), FiniteMap({0, 1})), DomainError);
}

TEST_CASE("inverse") {
  CHECK(inverse(FiniteMap({1, 2, 0})) == FiniteMap({2, 0, 1}));
  CHECK(inverse(FiniteMap::identity(5)) == FiniteMap::identity(5));
  try {
    inverse(FiniteMap({0, 0}));
    FAIL("expected NotInvertibleError");
  } catch (const NotInvertibleError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
  }
  for (const auto& p : all_permutations(4)) {
    FiniteMap f(p);
    CHECK(compose(f, inverse(f)).is_identity());
    CHECK(compose(inverse(f), f).is_identity());
  }
}

TEST_CASE("commute and image") {
  CHECK(commute(FiniteMap({1, 0}), FiniteMap({1, 0})));
  CHECK_FALSE(commute(FiniteMap({1, 0, 2}), FiniteMap({0, 2, 1})));
  CHECK(commute(FiniteMap::identity(3), FiniteMap({2, 2, 0})));
  CHECK_THROWS_AS(commute(FiniteMap({0}), FiniteMap({0, 1})), DomainError);

  CHECK(image(FiniteMap::constant(4, 0)) == std::vector<Elem>{0});
  CHECK(image(FiniteMap::identity(3)) == std::vector<Elem>{0, 1, 2});
  CHECK(image(FiniteMap({1, 1, 2})) == std::vector<Elem>{1, 2});
}

TEST_CASE("FiniteMap validation") {
  CHECK_THROWS_AS(FiniteMap(std::vector<Elem>{}), DomainError);
  CHECK_THROWS_AS(FiniteMap({0, 2}), DomainError);
  CHECK_THROWS_AS(FiniteMap({0, 1}).at(2), DomainError);
  CHECK(FiniteMap({2, 0, 0}).collision() == ElemPair{1, 2});
  CHECK_FALSE(FiniteMap({2, 0, 1}).collision());
}

TEST_CASE("powers memoize up to the period") {
  // 0 -> 1 -> 2 -> 3 -> 2: index 2, period 2
  FiniteMap f({1, 2, 3, 2});
  MapPowers p(f);
  CHECK(p.index() == 2);
  CHECK(p.period() == 2);
  for (std::size_t k = 0; k < 12; ++k) CHECK(p[k] == power(f, k));
  CHECK(p[1000] == power(f, 1000));
  CHECK(MapPowers(FiniteMap::identity(3))[7].is_identity());
}

TEST_CASE("SquareTable") {
  auto t = SquareTable::from_rows({{0, 1}, {1, 0}});
  CHECK(t(1, 0) == 1);
  CHECK(t.row_map(1) == FiniteMap({1, 0}));
  CHECK(t.rows() == std::vector<std::vector<Elem>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(SquareTable::from_rows({{0, 1}, {1}}), DomainError);
  CHECK_THROWS_AS(SquareTable::from_rows({{0, 2}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(t.at(2, 0), DomainError);
}

TEST_CASE("PairMap") {
  const auto tau = PairMap::swap(3);
  CHECK(compose(tau, tau).is_identity());
  CHECK(tau.inverse() == tau);
  // (x, y) -> (x, x): image point (0,0) has preimages (0,0) and (0,1)
  auto diag = PairMap::tabulate(2, [](Elem x, Elem) { return ElemPair{x, x}; });
  auto c = diag.collision();
  REQUIRE(c);
  CHECK(*c == std::vector<Elem>{0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(diag.inverse(), DegenerateError);
}

TEST_CASE("all_permutations is lexicographic") {
  auto p = all_permutations(3);
  REQUIRE(p.size() == 6);
  CHECK(p.front() == std::vector<Elem>{0, 1, 2});
  CHECK(p.back() == std::vector<Elem>{2, 1, 0});
  CHECK(std::is_sorted(p.begin(), p.end()));
  CHECK(all_permutations(5).size() == 120);
}
