#pragma once

#include <string>
#include <vector>

#include "critlab/edge_coloring.hpp"
#include "critlab/graph.hpp"
#include "critlab/surd.hpp"

namespace critlab {

/// A real threshold q. Degrees are integers, so d >= q iff d >= ceil(q),
/// and the comparison is exact even for irrational q.
struct DegreeThreshold {
  Surd value;
  BigInt cut;  // ceil(value)

  DegreeThreshold() = default;
  explicit DegreeThreshold(const Surd& q) : value(q), cut(q.ceil()) {}

  bool high(int degree) const { return cut <= degree; }  // degree >= q
  bool low(int degree) const { return !high(degree); }   // degree < q
  std::string to_string() const { return value.to_string(); }
};

/// |{u in N(z) - {x} : d(u) >= q}|. z need not be adjacent to x.
int sigma_q(const Graph& g, int x, int z, const DegreeThreshold& q);

struct PaletteAnalysis {
  int x = 0;
  int y = 0;
  DegreeThreshold q;
  ColorSet A;
  ColorSet B;
  ColorSet M;
  std::vector<int> NxM;  // sorted
  std::vector<int> NxB;  // sorted
  ColorSet missing_x;
  ColorSet missing_y;
};

/// Checks that phi colors G - xy with Delta(G) colors: xy uncolored, every
/// other edge colored, proper. DomainError otherwise.
void require_delta_coloring_without(const EdgeColoring& phi, int x, int y);

PaletteAnalysis analyze(const EdgeColoring& phi, int x, int y, const DegreeThreshold& q);

/// phi-bar(v) plus the colors of edges from v to neighbors of degree < q.
ColorSet phi_b(const EdgeColoring& phi, int v, const DegreeThreshold& q);

/// {phi(ww') : w' in N(w), phi(ww') in B - {phi(xw)}, d(w') < q}.
ColorSet b_w(const EdgeColoring& phi, const PaletteAnalysis& a, int w);

struct Deficiency {
  long p = 0;
  int y = -1;  // lowest-index neighbor achieving the minimum
  long sigma = 0;
  long base = 0;  // Delta - d(x) + 1
};

/// min over y' in N(x) of sigma_q(x,y') - (Delta - d(x) + 1).
Deficiency deficiency_p(const Graph& g, int x, const DegreeThreshold& q);

/// phi-bar(x) & phi-bar(y); empty whenever G is Delta-critical.
ColorSet common_missing(const EdgeColoring& phi, int x, int y);

/// The recoloring from the bbcolor argument: returns phi' with
/// phi'(xz) = phi(xz) missing at y. Requires z in N(x, M). Throws
/// CriticalityViolation when the (gamma,delta)-chains from x and y differ,
/// and DomainError when no color is missing at both x and v.
EdgeColoring normalize_coloring(const EdgeColoring& phi, int x, int y, int z, const DegreeThreshold& q);

}  // namespace critlab
