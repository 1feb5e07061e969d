#include "doctest.h"

#include <random>

#include "critlab/edge_coloring.hpp"
#include "critlab/graph6.hpp"
#include "oracles.hpp"

using namespace critlab;

namespace {

ClassVerdict oracle_class(const Graph& g) {
  return oracle::chromatic_index(g) == g.max_degree() ? ClassVerdict::Class1 : ClassVerdict::Class2;
}

}  // namespace

TEST_CASE("named graphs") {
  CHECK(chromatic_index(complete_graph(4), 100000).verdict == ClassVerdict::Class1);
  CHECK(chromatic_index(complete_graph(5), 100000).verdict == ClassVerdict::Class2);
  CHECK(chromatic_index(cycle_graph(5), 100000).verdict == ClassVerdict::Class2);
  CHECK(chromatic_index(cycle_graph(6), 100000).verdict == ClassVerdict::Class1);
  const ClassResult p = chromatic_index(petersen_graph(), 1000000);
  CHECK(p.verdict == ClassVerdict::Class2);
  CHECK(p.chromatic_index == 4);
  CHECK(chromatic_index(Graph(1, {}), 10).chromatic_index == 0);
}

TEST_CASE("class 1 verdicts come with a checked witness") {
  const ClassResult r = chromatic_index(complete_graph(6), 1000000);
  REQUIRE(r.verdict == ClassVerdict::Class1);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->colors() == 5);
  CHECK(r.witness->is_total());
  CHECK(is_proper(*r.witness));
}

TEST_CASE("budget exhaustion is reported as unknown") {
  const ColorabilityResult r = edge_colorable(petersen_graph(), 3, 5);
  CHECK(r.colorable == Tri::Unknown);
  CHECK(chromatic_index(petersen_graph(), 5).verdict == ClassVerdict::Unknown);
  CHECK(is_delta_critical(petersen_graph(), 5).verdict == Tri::Unknown);
}

TEST_CASE("exact search agrees with the matching oracle on random graphs") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 7;
    const Graph g = oracle::random_graph(n, 0.3 + (trial % 5) * 0.12, rng);
    if (g.size() == 0 || g.size() > 18) continue;
    const ClassResult r = chromatic_index(g, 10000000);
    REQUIRE(r.verdict != ClassVerdict::Unknown);
    CHECK(r.verdict == oracle_class(g));
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("criticality agrees with the oracle on all connected graphs up to 6 vertices") {
  const auto graphs = read_graph6_file(std::string(CRITLAB_DATA_DIR) + "/corpus/connected_n1-7.g6");
  int critical = 0;
  int checked = 0;
  for (const Graph& g : graphs) {
    if (g.order() > 6) continue;
    const CriticalityResult r = is_delta_critical(g, 10000000);
    REQUIRE(r.verdict != Tri::Unknown);
    const bool expected = oracle::delta_critical(g);
    CHECK((r.verdict == Tri::True) == expected);
    if (r.verdict == Tri::False && g.size() > 0 && g.connected() && !r.failing_edge && r.reason.empty()) {
      FAIL("negative verdict without a reason");
    }
    critical += expected;
    ++checked;
  }
  CHECK(checked == 143);
  CHECK(critical > 0);
}
