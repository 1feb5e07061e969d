#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critlab/graph.hpp"
#include "critlab/numeric.hpp"

namespace critlab {

struct IndependentSetResult {
  int alpha = 0;
  std::vector<int> witness;  // sorted
  std::uint64_t nodes_explored = 0;
};

/// Exact branch and bound: branch on a maximum-degree vertex of the candidate
/// set, prune with a greedy clique cover.
IndependentSetResult max_independent_set(const Graph& g);

bool is_independent(const Graph& g, const std::vector<int>& set);

struct BoundCheck {
  std::string name;      // "n/2", "3n/5", "(d+4)/(2d+6)n", "theorem"
  std::string relation;  // "<=" or "<"
  std::string bound;     // exact value as text
  bool applicable = true;
  bool holds = false;
  std::string note;
};

struct BoundReport {
  int n = 0;
  int alpha = 0;
  int min_degree = 0;
  std::vector<BoundCheck> checks;
};

/// Compares alpha with n/2, 3n/5, (d+4)/(2d+6) n and the theorem bound, all
/// exactly. d for the theorem is the largest supported value <= min degree;
/// the conjectured bound uses d = min degree (needs d >= 2).
BoundReport bound_report(const Graph& g, int alpha);
BoundReport bound_report(int n, int min_degree, int alpha);

}  // namespace critlab
