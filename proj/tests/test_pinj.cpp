#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fialg/partial_injection.hpp"

using namespace fialg;

TEST_CASE("construction and accessors") {
  PartialInjection f = PartialInjection::from_pairs(5, {{0, 3}, {2, 1}});
  CHECK(f.degree() == 5);
  CHECK(f.rank() == 2);
  CHECK(f.defined_at(0));
  CHECK_FALSE(f.defined_at(1));
  CHECK(f.target(0) == 3);
  CHECK(f.domain() == std::vector<int>{0, 2});
  CHECK(f.image() == std::vector<int>{1, 3});

  CHECK(PartialInjection::identity(3).rank() == 3);
  CHECK(PartialInjection::empty(3).rank() == 0);
  PartialInjection p = PartialInjection::partial_identity(4, {1, 3});
  CHECK(p.target(1) == 1);
  CHECK(p.target(3) == 3);
  CHECK_FALSE(p.defined_at(0));
}

TEST_CASE("from_pairs rejects invalid input") {
  CHECK_THROWS_AS(PartialInjection::from_pairs(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection::from_pairs(2, {{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection::from_pairs(3, {{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialInjection::from_pairs(3, {{0, 1}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("composition applies the left factor first") {
  PartialInjection f = PartialInjection::from_pairs(3, {{0, 1}});
  PartialInjection g = PartialInjection::from_pairs(3, {{1, 2}});
  PartialInjection fg = compose(f, g);
  CHECK(fg.target(0) == 2);
  CHECK(fg.rank() == 1);
  CHECK(compose(g, f) == PartialInjection::empty(3));
}

TEST_CASE("inverse swaps domain and image") {
  PartialInjection f = PartialInjection::from_pairs(4, {{0, 2}, {3, 1}});
  PartialInjection fi = f.inverse();
  CHECK(fi.target(2) == 0);
  CHECK(fi.target(1) == 3);
  CHECK(fi.inverse() == f);
  CHECK(compose(f, fi) == PartialInjection::partial_identity(4, f.domain()));
  CHECK(compose(fi, f) == PartialInjection::partial_identity(4, f.image()));
}

TEST_CASE("canonical order sorts by degree, then rank descending, then targets") {
  PartialInjection small = PartialInjection::identity(1);
  PartialInjection big = PartialInjection::empty(2);
  CHECK(canonical_less(small, big));

  PartialInjection full = PartialInjection::identity(2);
  PartialInjection half = PartialInjection::from_pairs(2, {{0, 0}});
  CHECK(canonical_less(full, half));  // higher rank first

  PartialInjection a = PartialInjection::from_pairs(2, {{1, 0}});  // [-1, 0]
  PartialInjection b = PartialInjection::from_pairs(2, {{0, 0}});  // [0, -1]
  CHECK(canonical_less(a, b));  // undefined compares lowest
  CHECK(a < b);
}

TEST_CASE("rendering lists the graph in domain order") {
  PartialInjection f = PartialInjection::from_pairs(9, {{0, 1}, {4, 3}, {6, 7}});
  CHECK(f.to_string() == "{0→1, 4→3, 6→7}");
  CHECK(PartialInjection::empty(2).to_string() == "{}");
}

TEST_CASE("algebraic laws hold on random samples") {
  std::mt19937 rng(7u);
  auto random_map = [&](int degree) {
    std::vector<int> targets(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) targets[static_cast<std::size_t>(i)] = i;
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < degree; ++i)
      if (rng() & 1) pairs.emplace_back(i, targets[static_cast<std::size_t>(i)]);
    return PartialInjection::from_pairs(degree, pairs);
  };
  for (int iter = 0; iter < 2000; ++iter) {
    const int d = 1 + static_cast<int>(rng() % 7);
    PartialInjection f = random_map(d), g = random_map(d), h = random_map(d);
    REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
    REQUIRE(compose(compose(f, f.inverse()), f) == f);
    REQUIRE(compose(f, g).inverse() == compose(g.inverse(), f.inverse()));
  }
}
