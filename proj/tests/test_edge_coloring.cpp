#include "doctest.h"

#include <random>

#include "critlab/edge_coloring.hpp"
#include "critlab/errors.hpp"
#include "oracles.hpp"

using namespace critlab;

TEST_CASE("color sets") {
  const ColorSet a{3, 1, 2, 2};
  CHECK(a.items() == std::vector<int>{1, 2, 3});
  CHECK(a.to_string() == "{1,2,3}");
  const ColorSet b = ColorSet::range(2, 5);
  CHECK((a | b) == ColorSet::range(1, 5));
  CHECK((a & b) == ColorSet{2, 3});
  CHECK((a - b) == ColorSet{1});
  CHECK(ColorSet{2, 3}.subset_of(a));
  CHECK(ColorSet{1}.disjoint(ColorSet{4}));
  ColorSet c;
  c.insert(7);
  c.insert(4);
  CHECK(c.lowest() == 4);
  c.erase(4);
  CHECK(c == ColorSet{7});
}

TEST_CASE("paint keeps palettes in sync and rejects conflicts") {
  auto g = std::make_shared<const Graph>(path_graph(4));
  EdgeColoring c(g, 2);
  c.paint(g->edge_id(0, 1), 1);
  CHECK(c.via(0, 1) == 1);
  CHECK(c.via(1, 1) == 0);
  CHECK(c.missing(1) == ColorSet{2});
  CHECK_THROWS_AS(c.paint(g->edge_id(1, 2), 1), DomainError);
  CHECK_THROWS_AS(c.paint(g->edge_id(1, 2), 3), DomainError);
  c.paint(g->edge_id(1, 2), 2);
  c.paint(g->edge_id(2, 3), 1);
  CHECK(c.is_total());
  CHECK(is_proper(c));
  CHECK(c.chain(0, 1, 2) == std::vector<int>{0, 1, 2});
  const EdgeColoring s = kempe_swap(c, 3, 1, 2);
  CHECK(s.color(0, 1) == 2);
  CHECK(s.color(1, 2) == 1);
  CHECK(s.color(2, 3) == 2);
  CHECK(is_proper(s));
  CHECK(c.color(0, 1) == 1);  // original untouched
  CHECK_THROWS_AS(c.with_colors(1), DomainError);
  CHECK(c.with_colors(5).colors() == 5);
}

TEST_CASE("functional helpers") {
  auto g = std::make_shared<const Graph>(cycle_graph(4));
  EdgeColoring c(g, 2);
  c = color_edge(c, 0, 1, 1);
  c = color_edge(c, 1, 2, 2);
  CHECK(c.color(1, 2) == 2);
  CHECK_THROWS_AS(color_edge(c, 0, 2, 1), DomainError);
  c = uncolor_edge(c, 0, 1);
  CHECK(c.color(0, 1) == 0);
  CHECK(c.colored_edges() == 1);
  CHECK(c.uncolored_edges().size() == 3);
}

TEST_CASE("fan coloring is proper with Delta + 1 colors") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 40;
    const Graph g = oracle::random_graph(n, 0.05 + (trial % 9) * 0.1, rng);
    const EdgeColoring c = vizing_color(g);
    CHECK(c.colors() == g.max_degree() + 1);
    CHECK(c.is_total());
    CHECK(is_proper(c));
  }
  const EdgeColoring p = vizing_color(petersen_graph());
  CHECK(is_proper(p));
  CHECK(p.max_color_used() <= 4);
}

TEST_CASE("delta coloring of G - xy") {
  // K4 with one edge subdivided is 3-critical.
  auto sub = std::make_shared<const Graph>(Graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}}));
  for (const Edge& e : sub->edges()) {
    const DeltaColoringResult r = delta_coloring_without(sub, e.u, e.v, 1000000);
    REQUIRE(r.coloring.has_value());
    CHECK(r.coloring->colors() == 3);
    CHECK(r.coloring->color(e.u, e.v) == 0);
    CHECK(r.coloring->colored_edges() == 6);
    CHECK(is_proper(*r.coloring));
  }
  // K5 - e still has more edges than four matchings can cover.
  auto k5 = std::make_shared<const Graph>(complete_graph(5));
  CHECK_FALSE(delta_coloring_without(k5, 0, 1, 1000000).coloring.has_value());
  // G - xy for K4 is 3-colorable; the missing edge just stays uncolored.
  auto k4 = std::make_shared<const Graph>(complete_graph(4));
  const DeltaColoringResult r = delta_coloring_without(k4, 0, 1, 1000000);
  REQUIRE(r.coloring.has_value());
  CHECK(is_proper(*r.coloring));
  // Petersen minus an edge still needs 4 colors.
  auto pet = std::make_shared<const Graph>(petersen_graph());
  const DeltaColoringResult none = delta_coloring_without(pet, 0, 1, 1000000);
  CHECK_FALSE(none.coloring.has_value());
  CHECK(none.method == "none");
}
