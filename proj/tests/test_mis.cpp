#include "doctest.h"

#include <random>

#include "critlab/mis.hpp"
#include "oracles.hpp"

using namespace critlab;

TEST_CASE("independence number of named graphs") {
  CHECK(max_independent_set(complete_graph(6)).alpha == 1);
  CHECK(max_independent_set(cycle_graph(7)).alpha == 3);
  CHECK(max_independent_set(star_graph(5)).alpha == 5);
  const IndependentSetResult p = max_independent_set(petersen_graph());
  CHECK(p.alpha == 4);
  CHECK(is_independent(petersen_graph(), p.witness));
  CHECK(max_independent_set(Graph(1, {})).alpha == 1);
}

TEST_CASE("is_independent") {
  const Graph c = cycle_graph(5);
  CHECK(is_independent(c, {0, 2}));
  CHECK_FALSE(is_independent(c, {0, 1}));
  CHECK_FALSE(is_independent(c, {0, 0}));
  CHECK_FALSE(is_independent(c, {5}));
}

TEST_CASE("branch and bound agrees with subset enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 18;
    const Graph g = oracle::random_graph(n, 0.1 + (trial % 8) * 0.1, rng);
    const IndependentSetResult r = max_independent_set(g);
    CHECK(r.alpha == oracle::independence_number(g));
    CHECK(static_cast<int>(r.witness.size()) == r.alpha);
    CHECK(is_independent(g, r.witness));
  }
}

TEST_CASE("larger sparse instance") {
  std::mt19937_64 rng(5);
  const Graph g = oracle::random_graph(80, 0.08, rng);
  const IndependentSetResult r = max_independent_set(g);
  CHECK(is_independent(g, r.witness));
  CHECK(r.alpha >= 20);
}

TEST_CASE("bound report") {
  const BoundReport c5 = bound_report(cycle_graph(5), 2);
  REQUIRE(c5.checks.size() == 4);
  CHECK(c5.checks[0].name == "n/2");
  CHECK(c5.checks[0].bound == "5/2");
  CHECK(c5.checks[0].holds);
  CHECK(c5.checks[1].bound == "3");
  CHECK(c5.checks[2].bound == "3");  // (2+4)/(4+6) * 5
  CHECK(c5.checks[2].holds);
  CHECK_FALSE(c5.checks[3].applicable);

  // d = 3: coefficient (5 + w)/(10 + w) with w = 2 is 7/12.
  const BoundReport r = bound_report(12, 3, 7);
  CHECK(r.checks[3].applicable);
  CHECK(r.checks[3].bound == "7");
  CHECK_FALSE(r.checks[3].holds);
  CHECK(bound_report(12, 3, 6).checks[3].holds);
  CHECK(r.checks[2].bound == "7");  // (3+4)/(6+6) * 12
  CHECK_FALSE(r.checks[2].holds);

  // Minimum degree 1 leaves only the first two bounds.
  const BoundReport s = bound_report(star_graph(3), 3);
  CHECK_FALSE(s.checks[2].applicable);
  CHECK_FALSE(s.checks[1].holds);
  CHECK_FALSE(s.checks[0].holds);
}
