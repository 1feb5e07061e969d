#include <algorithm>
#include <bit>
#include <stdexcept>

#include "critlab/edge_coloring.hpp"
#include "critlab/errors.hpp"

namespace critlab {

namespace {

using Mask = std::uint64_t;

class BudgetExhausted : public std::exception {};

// Depth-first search over a fixed edge order. Pruning:
//  * every uncolored edge next to the one just colored keeps a free color;
//  * every vertex has at least as many free colors as uncolored edges;
//  * color c can still go on at most floor(m_c / 2) more edges, where m_c
//    counts vertices with uncolored edges that miss c.
class Search {
 public:
  Search(const Graph& g, int k, std::uint64_t budget) : g_(g), k_(k), budget_(budget) {
    full_ = ((Mask{1} << k) - 1) << 1;
    used_.assign(g.order(), 0);
    rem_.resize(g.order());
    for (int v = 0; v < g.order(); ++v) rem_[v] = g.degree(v);
    color_.assign(g.size(), 0);
  }

  Tri run() {
    const Graph& g = g_;
    // Symmetry: the lowest-index max-degree vertex sees colors 1..deg in
    // neighbor order. Any proper coloring can be permuted into this form.
    int s = 0;
    for (int v = 1; v < g.order(); ++v)
      if (g.degree(v) > g.degree(s)) s = v;
    int c = 1;
    for (int w : g.neighbors(s)) {
      if (c > k_) return Tri::False;
      const int id = g.edge_id(s, w);
      if (!assign(id, c++)) return Tri::False;
    }

    std::vector<int> ids;
    for (int id = 0; id < static_cast<int>(g.size()); ++id)
      if (color_[id] == 0) ids.push_back(id);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
      const Edge& ea = g.edges()[a];
      const Edge& eb = g.edges()[b];
      return g.degree(ea.u) + g.degree(ea.v) > g.degree(eb.u) + g.degree(eb.v);
    });
    order_ = std::move(ids);
    remaining_ = order_.size();
    if (!feasible()) return Tri::False;
    try {
      return dfs(0) ? Tri::True : Tri::False;
    } catch (const BudgetExhausted&) {
      return Tri::Unknown;
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool assign(int id, int c) {
    const Edge& e = g_.edges()[id];
    const Mask bit = Mask{1} << c;
    if ((used_[e.u] | used_[e.v]) & bit) return false;
    used_[e.u] |= bit;
    used_[e.v] |= bit;
    --rem_[e.u];
    --rem_[e.v];
    color_[id] = c;
    return true;
  }

  void unassign(int id) {
    const Edge& e = g_.edges()[id];
    const Mask bit = Mask{1} << color_[id];
    used_[e.u] &= ~bit;
    used_[e.v] &= ~bit;
    ++rem_[e.u];
    ++rem_[e.v];
    color_[id] = 0;
  }

  bool feasible() const {
    long capacity = 0;
    for (int c = 1; c <= k_; ++c) {
      const Mask bit = Mask{1} << c;
      int m = 0;
      for (int v = 0; v < g_.order(); ++v)
        if (rem_[v] > 0 && !(used_[v] & bit)) ++m;
      capacity += m / 2;
    }
    if (capacity < static_cast<long>(remaining_)) return false;
    for (int v = 0; v < g_.order(); ++v)
      if (rem_[v] > k_ - std::popcount(used_[v])) return false;
    return true;
  }

  bool neighbors_ok(const Edge& e) const {
    for (int end : {e.u, e.v}) {
      for (int w : g_.neighbors(end)) {
        const int id = g_.edge_id(end, w);
        if (color_[id] != 0) continue;
        if (!(full_ & ~(used_[end] | used_[w]))) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int id = order_[pos];
    const Edge& e = g_.edges()[id];
    Mask avail = full_ & ~(used_[e.u] | used_[e.v]);
    while (avail) {
      const int c = std::countr_zero(avail);
      avail &= avail - 1;
      if (++nodes_ > budget_) throw BudgetExhausted();
      assign(id, c);
      --remaining_;
      if (neighbors_ok(e) && feasible() && dfs(pos + 1)) return true;
      ++remaining_;
      unassign(id);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  Mask full_ = 0;
  std::vector<Mask> used_;
  std::vector<int> rem_;
  std::vector<int> color_;
  std::vector<int> order_;
  std::size_t remaining_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ColorabilityResult edge_colorable(const Graph& g, int k, std::uint64_t budget) {
  auto shared = std::make_shared<const Graph>(g);
  ColorabilityResult out;
  if (g.size() == 0) {
    out.colorable = Tri::True;
    out.witness = EdgeColoring(shared, std::max(k, 0));
    return out;
  }
  if (k < g.max_degree()) {
    out.colorable = Tri::False;
    return out;
  }
  if (k > g.max_degree()) {
    out.colorable = Tri::True;
    out.witness = vizing_color(shared).with_colors(k);
    return out;
  }
  if (k > 63) return out;  // beyond the bitmask search; stays Unknown

  Search search(g, k, budget);
  out.colorable = search.run();
  out.nodes = search.nodes();
  if (out.colorable == Tri::True) {
    EdgeColoring c(shared, k);
    for (int id = 0; id < static_cast<int>(g.size()); ++id) c.paint(id, search.colors()[id]);
    out.witness = std::move(c);
  }
  return out;
}

ClassResult chromatic_index(const Graph& g, std::uint64_t budget) {
  ClassResult out;
  auto shared = std::make_shared<const Graph>(g);
  const int delta = g.max_degree();
  if (delta == 0) {
    out.verdict = ClassVerdict::Class1;
    out.witness = EdgeColoring(shared, 0);
    out.chromatic_index = 0;
    return out;
  }
  EdgeColoring fan = vizing_color(shared);
  if (fan.max_color_used() <= delta) {
    out.verdict = ClassVerdict::Class1;
    out.witness = fan.with_colors(delta);
    out.chromatic_index = delta;
    return out;
  }
  ColorabilityResult r = edge_colorable(g, delta, budget);
  out.budget_spent = r.nodes;
  if (r.colorable == Tri::True) {
    out.verdict = ClassVerdict::Class1;
    out.witness = std::move(r.witness);
    out.chromatic_index = delta;
  } else if (r.colorable == Tri::False) {
    out.verdict = ClassVerdict::Class2;
    out.chromatic_index = delta + 1;
  }
  return out;
}

CriticalityResult is_delta_critical(const Graph& g, std::uint64_t budget) {
  CriticalityResult out;
  if (!g.connected()) {
    out.verdict = Tri::False;
    out.reason = "disconnected";
    return out;
  }
  ClassResult cls = chromatic_index(g, budget);
  out.budget_spent = cls.budget_spent;
  if (cls.verdict == ClassVerdict::Unknown) {
    out.reason = "class undetermined within budget";
    return out;
  }
  if (cls.verdict == ClassVerdict::Class1) {
    out.verdict = Tri::False;
    out.reason = "class 1";
    return out;
  }
  const int delta = g.max_degree();
  bool unknown = false;
  for (const Edge& e : g.edges()) {
    ColorabilityResult r = edge_colorable(g.without_edge(e.u, e.v), delta, budget);
    out.budget_spent += r.nodes;
    if (r.colorable == Tri::False) {
      out.verdict = Tri::False;
      out.failing_edge = e;
      out.reason = "G - " + to_string(e) + " is not Delta-colorable";
      return out;
    }
    if (r.colorable == Tri::Unknown && !unknown) {
      unknown = true;
      out.failing_edge = e;
      out.reason = "G - " + to_string(e) + " undetermined within budget";
    }
  }
  if (unknown) return out;
  out.verdict = Tri::True;
  out.reason = "class 2 and every edge deletion is Delta-colorable";
  return out;
}

namespace {

// Tries to put a color from [1, delta] on the uncolored edge, using at most
// one Kempe swap at an endpoint.
bool kempe_recolor(EdgeColoring& c, int id, int delta) {
  const Edge e = c.graph().edges()[id];
  for (int col = 1; col <= delta; ++col) {
    if (c.is_missing(e.u, col) && c.is_missing(e.v, col)) {
      c.paint(id, col);
      return true;
    }
  }
  for (int a = 1; a <= delta; ++a) {
    if (!c.is_missing(e.u, a)) continue;
    for (int b = 1; b <= delta; ++b) {
      if (a == b || !c.is_missing(e.v, b)) continue;
      c.swap_chain(e.v, a, b);
      if (c.is_missing(e.u, a) && c.is_missing(e.v, a)) {
        c.paint(id, a);
        return true;
      }
      c.swap_chain(e.v, a, b);
    }
  }
  return false;
}

}  // namespace

DeltaColoringResult delta_coloring_without(std::shared_ptr<const Graph> g, int x, int y, std::uint64_t budget) {
  const int skip = g->edge_id(x, y);
  if (skip < 0) throw DomainError("not an edge: " + to_string(Edge(x, y)));
  const int delta = g->max_degree();
  DeltaColoringResult out;

  EdgeColoring c(g, delta + 1);
  for (int id = 0; id < static_cast<int>(g->size()); ++id)
    if (id != skip) fan_color_edge(c, id);
  if (c.max_color_used() <= delta) {
    out.coloring = c.with_colors(delta);
    out.method = "vizing";
    return out;
  }

  bool clean = true;
  for (int id = 0; id < static_cast<int>(g->size()); ++id) {
    if (c.color(id) != delta + 1) continue;
    c.erase(id);
    if (!kempe_recolor(c, id, delta)) {
      c.paint(id, delta + 1);
      clean = false;
    }
  }
  if (clean) {
    out.coloring = c.with_colors(delta);
    out.method = "kempe";
    return out;
  }

  const Graph rest = g->without_edge(x, y);
  ColorabilityResult r = edge_colorable(rest, delta, budget);
  out.nodes = r.nodes;
  if (r.colorable != Tri::True) {
    out.method = "none";
    return out;
  }
  EdgeColoring mapped(g, delta);
  for (int id = 0; id < static_cast<int>(rest.size()); ++id) {
    const Edge& e = rest.edges()[id];
    mapped.paint(g->edge_id(e.u, e.v), r.witness->color(id));
  }
  out.coloring = std::move(mapped);
  out.method = "search";
  return out;
}

}  // namespace critlab
