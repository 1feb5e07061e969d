#include "critlab/edge_coloring.hpp"

#include <algorithm>
#include <iterator>

#include "critlab/errors.hpp"

namespace critlab {

// ---- ColorSet ---------------------------------------------------------------

ColorSet::ColorSet(std::initializer_list<int> colors) : ColorSet(std::vector<int>(colors)) {}

ColorSet::ColorSet(std::vector<int> colors) : items_(std::move(colors)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

ColorSet ColorSet::range(int lo, int hi) {
  ColorSet s;
  for (int c = lo; c <= hi; ++c) s.items_.push_back(c);
  return s;
}

bool ColorSet::contains(int c) const { return std::binary_search(items_.begin(), items_.end(), c); }

void ColorSet::insert(int c) {
  auto it = std::lower_bound(items_.begin(), items_.end(), c);
  if (it == items_.end() || *it != c) items_.insert(it, c);
}

void ColorSet::erase(int c) {
  auto it = std::lower_bound(items_.begin(), items_.end(), c);
  if (it != items_.end() && *it == c) items_.erase(it);
}

ColorSet operator|(const ColorSet& a, const ColorSet& b) {
  ColorSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
  return out;
}

ColorSet operator&(const ColorSet& a, const ColorSet& b) {
  ColorSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
  return out;
}

ColorSet operator-(const ColorSet& a, const ColorSet& b) {
  ColorSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
  return out;
}

bool ColorSet::subset_of(const ColorSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

std::string ColorSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(items_[i]);
  }
  return out + "}";
}

// ---- EdgeColoring -----------------------------------------------------------

EdgeColoring::EdgeColoring(std::shared_ptr<const Graph> graph, int k) : graph_(std::move(graph)), k_(k) {
  if (!graph_) throw DomainError("coloring needs a graph");
  if (k < 0) throw DomainError("negative palette size");
  edge_color_.assign(graph_->size(), 0);
  via_.assign(static_cast<std::size_t>(graph_->order()) * (k_ + 1), -1);
  colored_degree_.assign(graph_->order(), 0);
}

int EdgeColoring::color(int u, int v) const {
  const int id = graph_->edge_id(u, v);
  if (id < 0) throw DomainError("not an edge: " + to_string(Edge(u, v)));
  return edge_color_[id];
}

ColorSet EdgeColoring::present(int v) const {
  std::vector<int> out;
  for (int c = 1; c <= k_; ++c)
    if (via(v, c) >= 0) out.push_back(c);
  return ColorSet(std::move(out));
}

ColorSet EdgeColoring::missing(int v) const {
  std::vector<int> out;
  for (int c = 1; c <= k_; ++c)
    if (via(v, c) < 0) out.push_back(c);
  return ColorSet(std::move(out));
}

int EdgeColoring::max_color_used() const {
  return edge_color_.empty() ? 0 : *std::max_element(edge_color_.begin(), edge_color_.end());
}

std::vector<int> EdgeColoring::uncolored_edges() const {
  std::vector<int> out;
  for (int id = 0; id < static_cast<int>(edge_color_.size()); ++id)
    if (edge_color_[id] == 0) out.push_back(id);
  return out;
}

void EdgeColoring::paint(int edge_id, int c) {
  const Edge& e = graph_->edges().at(edge_id);
  if (edge_color_[edge_id] != 0) throw DomainError("edge " + to_string(e) + " is already colored");
  if (c < 1 || c > k_) throw DomainError("color " + std::to_string(c) + " outside [1," + std::to_string(k_) + "]");
  for (int w : {e.u, e.v}) {
    if (via(w, c) >= 0) {
      throw DomainError("color " + std::to_string(c) + " already present at vertex " + std::to_string(w));
    }
  }
  edge_color_[edge_id] = c;
  via_[slot(e.u, c)] = e.v;
  via_[slot(e.v, c)] = e.u;
  ++colored_degree_[e.u];
  ++colored_degree_[e.v];
  ++colored_;
}

void EdgeColoring::erase(int edge_id) {
  const Edge& e = graph_->edges().at(edge_id);
  const int c = edge_color_[edge_id];
  if (c == 0) throw DomainError("edge " + to_string(e) + " is not colored");
  edge_color_[edge_id] = 0;
  via_[slot(e.u, c)] = -1;
  via_[slot(e.v, c)] = -1;
  --colored_degree_[e.u];
  --colored_degree_[e.v];
  --colored_;
}

std::vector<int> EdgeColoring::chain(int v, int a, int b) const {
  if (a == b) throw DomainError("Kempe chain needs two distinct colors");
  if (a < 1 || a > k_ || b < 1 || b > k_) throw DomainError("Kempe chain color out of range");
  std::vector<int> out;
  auto walk = [&](int first) {
    int cur = v;
    int c = first;
    while (true) {
      const int next = via(cur, c);
      if (next < 0) return false;
      const int id = graph_->edge_id(cur, next);
      if (!out.empty() && id == out.front()) return true;  // closed cycle
      out.push_back(id);
      cur = next;
      c = (c == a) ? b : a;
      if (cur == v) return true;
    }
  };
  const bool cycle = walk(a);
  if (!cycle) {
    std::vector<int> forward = std::move(out);
    out.clear();
    walk(b);
    std::reverse(out.begin(), out.end());
    out.insert(out.end(), forward.begin(), forward.end());
  }
  return out;
}

std::vector<int> EdgeColoring::swap_chain(int v, int a, int b) {
  std::vector<int> ids = chain(v, a, b);
  std::vector<int> old(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    old[i] = edge_color_[ids[i]];
    erase(ids[i]);
  }
  for (std::size_t i = 0; i < ids.size(); ++i) paint(ids[i], old[i] == a ? b : a);
  return ids;
}

EdgeColoring EdgeColoring::with_colors(int k) const {
  EdgeColoring out(graph_, k);
  for (int id = 0; id < static_cast<int>(edge_color_.size()); ++id) {
    if (edge_color_[id] > k) throw DomainError("color " + std::to_string(edge_color_[id]) + " exceeds new palette");
    if (edge_color_[id] != 0) out.paint(id, edge_color_[id]);
  }
  return out;
}

bool is_proper(const EdgeColoring& c) {
  const Graph& g = c.graph();
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> seen;
    for (int w : g.neighbors(v)) {
      const int col = c.color(g.edge_id(v, w));
      if (col == 0) continue;
      if (col < 0 || col > c.colors()) return false;
      seen.push_back(col);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

EdgeColoring color_edge(const EdgeColoring& c, int u, int v, int alpha) {
  const int id = c.graph().edge_id(u, v);
  if (id < 0) throw DomainError("not an edge: " + to_string(Edge(u, v)));
  EdgeColoring out = c;
  out.paint(id, alpha);
  return out;
}

EdgeColoring uncolor_edge(const EdgeColoring& c, int u, int v) {
  const int id = c.graph().edge_id(u, v);
  if (id < 0) throw DomainError("not an edge: " + to_string(Edge(u, v)));
  EdgeColoring out = c;
  out.erase(id);
  return out;
}

EdgeColoring kempe_swap(const EdgeColoring& c, int v, int alpha, int beta) {
  EdgeColoring out = c;
  out.swap_chain(v, alpha, beta);
  return out;
}

// ---- Misra-Gries -------------------------------------------------------------

void fan_color_edge(EdgeColoring& c, int edge_id) {
  const Graph& g = c.graph();
  const Edge e = g.edges().at(edge_id);
  const int u = e.u;
  auto lowest_missing = [&](int w) {
    for (int col = 1; col <= c.colors(); ++col)
      if (c.is_missing(w, col)) return col;
    throw DomainError("vertex " + std::to_string(w) + " has no free color; need k >= Delta + 1");
  };

  // Maximal fan at u starting from e.v.
  std::vector<int> fan{e.v};
  std::vector<char> in_fan(g.order(), 0);
  in_fan[e.v] = 1;
  while (true) {
    const int tip = fan.back();
    int next = -1;
    for (int col = 1; col <= c.colors() && next < 0; ++col) {
      if (!c.is_missing(tip, col)) continue;
      const int w = c.via(u, col);
      if (w >= 0 && !in_fan[w]) next = w;
    }
    if (next < 0) break;
    fan.push_back(next);
    in_fan[next] = 1;
  }

  const int cu = lowest_missing(u);
  const int dl = lowest_missing(fan.back());
  if (cu != dl && !c.is_missing(u, dl)) c.swap_chain(u, cu, dl);
  // Now dl is free at u. Pick the first fan vertex w with dl free whose
  // prefix is still a fan.
  std::size_t w = fan.size();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (i > 0) {
      const int col = c.color(u, fan[i]);
      if (col == 0 || !c.is_missing(fan[i - 1], col)) break;
    }
    if (c.is_missing(fan[i], dl)) {
      w = i;
      break;
    }
  }
  if (w >= fan.size()) throw std::logic_error("fan rotation found no free vertex");

  std::vector<int> shifted(w);
  for (std::size_t i = 0; i < w; ++i) {
    shifted[i] = c.color(u, fan[i + 1]);
    c.erase(g.edge_id(u, fan[i + 1]));
  }
  for (std::size_t i = 0; i < w; ++i) c.paint(g.edge_id(u, fan[i]), shifted[i]);
  c.paint(g.edge_id(u, fan[w]), dl);
}

EdgeColoring vizing_color(std::shared_ptr<const Graph> g) {
  EdgeColoring c(g, g->max_degree() + 1);
  for (int id = 0; id < static_cast<int>(g->size()); ++id) fan_color_edge(c, id);
  return c;
}

EdgeColoring vizing_color(const Graph& g) { return vizing_color(std::make_shared<const Graph>(g)); }

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: break;
  }
  return "unknown";
}

std::string to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::Class1: return "Class1";
    case ClassVerdict::Class2: return "Class2";
    case ClassVerdict::Unknown: break;
  }
  return "Unknown";
}

}  // namespace critlab
