#include "critlab/palette.hpp"

#include <algorithm>
#include <limits>

#include "critlab/errors.hpp"

namespace critlab {

int sigma_q(const Graph& g, int x, int z, const DegreeThreshold& q) {
  int count = 0;
  for (int u : g.neighbors(z))
    if (u != x && q.high(g.degree(u))) ++count;
  return count;
}

void require_delta_coloring_without(const EdgeColoring& phi, int x, int y) {
  const Graph& g = phi.graph();
  const int id = g.edge_id(x, y);
  if (id < 0) throw DomainError("not an edge: " + to_string(Edge(x, y)));
  if (phi.color(id) != 0) throw DomainError("edge " + to_string(Edge(x, y)) + " must be uncolored");
  if (phi.colors() != g.max_degree()) {
    throw DomainError("coloring uses " + std::to_string(phi.colors()) + " colors; expected Delta = " +
                      std::to_string(g.max_degree()));
  }
  if (phi.colored_edges() + 1 != g.size()) throw DomainError("coloring of G - xy is not total");
  if (!is_proper(phi)) throw DomainError("coloring is not proper");
}

PaletteAnalysis analyze(const EdgeColoring& phi, int x, int y, const DegreeThreshold& q) {
  require_delta_coloring_without(phi, x, y);
  const Graph& g = phi.graph();
  PaletteAnalysis a;
  a.x = x;
  a.y = y;
  a.q = q;
  a.missing_x = phi.missing(x);
  a.missing_y = phi.missing(y);
  for (int col : phi.present(x)) {
    const int u = phi.via(y, col);
    if (u < 0) continue;
    if (q.high(g.degree(u))) {
      a.B.insert(col);
    } else {
      a.A.insert(col);
    }
  }
  a.M = a.A | a.missing_x | a.missing_y;
  for (int z : g.neighbors(x)) {
    if (z == y) continue;
    const int col = phi.color(x, z);
    if (a.M.contains(col)) a.NxM.push_back(z);
    if (a.B.contains(col)) a.NxB.push_back(z);
  }
  return a;
}

ColorSet phi_b(const EdgeColoring& phi, int v, const DegreeThreshold& q) {
  const Graph& g = phi.graph();
  ColorSet out = phi.missing(v);
  for (int w : g.neighbors(v)) {
    const int col = phi.color(v, w);
    if (col != 0 && q.low(g.degree(w))) out.insert(col);
  }
  return out;
}

ColorSet b_w(const EdgeColoring& phi, const PaletteAnalysis& a, int w) {
  const Graph& g = phi.graph();
  if (!g.adjacent(a.x, w)) throw DomainError("w=" + std::to_string(w) + " is not a neighbor of x");
  const int beta = phi.color(a.x, w);
  ColorSet out;
  for (int w2 : g.neighbors(w)) {
    const int col = phi.color(w, w2);
    if (col == 0 || col == beta || !a.B.contains(col)) continue;
    if (a.q.low(g.degree(w2))) out.insert(col);
  }
  return out;
}

Deficiency deficiency_p(const Graph& g, int x, const DegreeThreshold& q) {
  if (g.degree(x) == 0) throw DomainError("vertex " + std::to_string(x) + " has no neighbors");
  Deficiency best;
  best.base = static_cast<long>(g.max_degree()) - g.degree(x) + 1;
  best.p = std::numeric_limits<long>::max();
  for (int y : g.neighbors(x)) {
    const long s = sigma_q(g, x, y, q);
    if (s - best.base < best.p) {
      best.p = s - best.base;
      best.y = y;
      best.sigma = s;
    }
  }
  return best;
}

ColorSet common_missing(const EdgeColoring& phi, int x, int y) { return phi.missing(x) & phi.missing(y); }

namespace {

bool chain_touches(const EdgeColoring& phi, const std::vector<int>& ids, int v) {
  for (int id : ids) {
    const Edge& e = phi.graph().edges()[id];
    if (e.u == v || e.v == v) return true;
  }
  return false;
}

}  // namespace

EdgeColoring normalize_coloring(const EdgeColoring& phi, int x, int y, int z, const DegreeThreshold& q) {
  const PaletteAnalysis a = analyze(phi, x, y, q);
  if (z == y || !phi.graph().adjacent(x, z)) throw DomainError("z must be a neighbor of x other than y");
  if (!std::binary_search(a.NxM.begin(), a.NxM.end(), z)) throw DomainError("z is not in N(x, M)");
  const int alpha = phi.color(x, z);
  if (phi.is_missing(y, alpha)) return phi;

  // alpha is in A: it reaches y through a low-degree neighbor v.
  const Graph& g = phi.graph();
  const int v = phi.via(y, alpha);
  const int yv = g.edge_id(y, v);
  const int gamma = a.missing_y.lowest();
  EdgeColoring out = phi;
  if (!phi.is_missing(v, gamma)) {
    const ColorSet shared = a.missing_x & phi.missing(v);
    if (shared.empty()) {
      throw DomainError("no color missing at both x and v=" + std::to_string(v) +
                        "; needs d(x) < eps*Delta and d(v) < q");
    }
    const int delta = shared.lowest();
    const std::vector<int> px = phi.chain(x, gamma, delta);
    if (!chain_touches(phi, px, y)) {
      throw CriticalityViolation("the (" + std::to_string(gamma) + "," + std::to_string(delta) +
                                 ")-chains at x and y differ; swapping at x frees color " +
                                 std::to_string(gamma) + " for xy");
    }
    out.swap_chain(v, gamma, delta);
  }
  out.erase(yv);
  out.paint(yv, gamma);
  return out;
}

}  // namespace critlab
