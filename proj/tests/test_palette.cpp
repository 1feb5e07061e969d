#include "doctest.h"

#include <algorithm>
#include <optional>

#include "critlab/edge_coloring.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph6.hpp"
#include "critlab/palette.hpp"
#include "oracles.hpp"

using namespace critlab;

namespace {

EdgeColoring c5_coloring() {
  // C5 - 01 is the path 1-2-3-4-0, colored 1,2,1,2.
  auto g = std::make_shared<const Graph>(cycle_graph(5));
  EdgeColoring c(g, 2);
  c.paint(g->edge_id(1, 2), 1);
  c.paint(g->edge_id(2, 3), 2);
  c.paint(g->edge_id(3, 4), 1);
  c.paint(g->edge_id(0, 4), 2);
  return c;
}

std::vector<Graph> small_critical_graphs() {
  std::vector<Graph> out;
  for (const Graph& g : read_graph6_file(std::string(CRITLAB_DATA_DIR) + "/corpus/connected_n1-7.g6")) {
    if (g.max_degree() >= 2 && g.size() <= 16 && oracle::delta_critical(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("degree thresholds compare exactly") {
  const DegreeThreshold q(Surd(Rational(7, 2)));
  CHECK(q.cut == 4);
  CHECK(q.high(4));
  CHECK(q.low(3));
  const DegreeThreshold r(Surd(3));
  CHECK(r.high(3));
}

TEST_CASE("sigma and deficiency on K4") {
  const Graph k4 = complete_graph(4);
  const DegreeThreshold q(Surd(3));
  CHECK(sigma_q(k4, 0, 1, q) == 2);
  const Deficiency d = deficiency_p(k4, 0, q);
  CHECK(d.base == 1);
  CHECK(d.p == 1);
  CHECK(d.y == 1);
  // With a threshold above every degree nothing is high.
  CHECK(deficiency_p(k4, 0, DegreeThreshold(Surd(4))).p == -1);
}

TEST_CASE("palette sets on C5") {
  const EdgeColoring c = c5_coloring();
  const PaletteAnalysis a = analyze(c, 0, 1, DegreeThreshold(Surd(2)));
  CHECK(a.missing_x == ColorSet{1});
  CHECK(a.missing_y == ColorSet{2});
  CHECK(a.A.empty());
  CHECK(a.B.empty());
  CHECK(a.M == ColorSet{1, 2});
  CHECK(a.NxM == std::vector<int>{4});
  CHECK(a.NxB.empty());
  CHECK(common_missing(c, 0, 1).empty());
  CHECK(phi_b(c, 2, DegreeThreshold(Surd(2))) == ColorSet{});
  CHECK(phi_b(c, 2, DegreeThreshold(Surd(3))) == ColorSet{1, 2});
  CHECK(normalize_coloring(c, 0, 1, 4, DegreeThreshold(Surd(2))) == c);
}

TEST_CASE("analysis rejects colorings that are not of G - xy") {
  EdgeColoring c = c5_coloring();
  CHECK_THROWS_AS(analyze(c, 0, 2, DegreeThreshold(Surd(2))), DomainError);
  CHECK_THROWS_AS(analyze(c.with_colors(3), 0, 1, DegreeThreshold(Surd(2))), DomainError);
  c.erase(c.graph().edge_id(2, 3));
  CHECK_THROWS_AS(analyze(c, 0, 1, DegreeThreshold(Surd(2))), DomainError);
  CHECK_THROWS_AS(normalize_coloring(c5_coloring(), 0, 1, 2, DegreeThreshold(Surd(2))), DomainError);
}

TEST_CASE("palette structure on small critical graphs") {
  const auto graphs = small_critical_graphs();
  REQUIRE(graphs.size() >= 5);
  int normalized = 0;
  for (const Graph& graph : graphs) {
    auto g = std::make_shared<const Graph>(graph);
    const DegreeThreshold q(Surd(g->max_degree()));
    for (const Edge& e : g->edges()) {
      for (const auto& [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        const DeltaColoringResult r = delta_coloring_without(g, x, y, 1000000);
        REQUIRE(r.coloring.has_value());
        const EdgeColoring& phi = *r.coloring;
        const PaletteAnalysis a = analyze(phi, x, y, q);
        CHECK(common_missing(phi, x, y).empty());
        CHECK(a.A.disjoint(a.B));
        CHECK((a.A | a.B) == (phi.present(x) & phi.present(y)));
        CHECK(a.M == (a.A | phi.missing(x) | phi.missing(y)));
        CHECK(a.NxM.size() + a.NxB.size() == static_cast<std::size_t>(g->degree(x) - 1));
        CHECK(phi.missing(x).size() == static_cast<std::size_t>(g->max_degree() - g->degree(x) + 1));
        for (int z : a.NxM) {
          std::optional<EdgeColoring> normalized_phi;
          try {
            normalized_phi = normalize_coloring(phi, x, y, z, q);
          } catch (const DomainError&) {
            continue;  // no color free at both x and v; the degree hypotheses fail here
          }
          const EdgeColoring& out = *normalized_phi;
          CHECK(is_proper(out));
          CHECK(out.color(x, y) == 0);
          CHECK(out.colored_edges() == phi.colored_edges());
          CHECK(out.is_missing(y, out.color(x, z)));
          CHECK(out.color(x, z) == phi.color(x, z));
          const PaletteAnalysis b = analyze(out, x, y, q);
          CHECK(b.M == a.M);
          CHECK(b.B == a.B);
          for (int w : a.NxB) CHECK(b_w(out, b, w) == b_w(phi, a, w));
          ++normalized;
        }
      }
    }
  }
  CHECK(normalized > 0);
}
