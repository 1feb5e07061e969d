#include "critlab/graph.hpp"

#include <algorithm>
#include <numeric>

#include "critlab/errors.hpp"

namespace critlab {

std::string to_string(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxVertices) {
    throw DomainError("vertex count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVertices) + "]");
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) throw DomainError("edge " + to_string(e) + " out of range");
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw DomainError("parallel edge " + to_string(*dup));
  }

  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.assign(offsets_[n], 0);
  slot_edge_.assign(offsets_[n], 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Lexicographic edge order makes every neighbor list come out sorted:
  // for vertex w, edges (u, w) with u < w arrive in increasing u before any (w, v).
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    adj_[fill[e.u]] = e.v;
    slot_edge_[fill[e.u]++] = id;
    adj_[fill[e.v]] = e.u;
    slot_edge_[fill[e.v]++] = id;
  }
  words_ = (n + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (const Edge& e : edges_) {
    rows_[static_cast<std::size_t>(e.u) * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    rows_[static_cast<std::size_t>(e.v) * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
  max_degree_ = *std::max_element(deg.begin(), deg.end());
  min_degree_ = *std::min_element(deg.begin(), deg.end());
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

int Graph::edge_id(int u, int v) const {
  if (!adjacent(u, v)) return -1;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  return slot_edge_[offsets_[u] + static_cast<int>(it - nb.begin())];
}

bool Graph::connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph Graph::without_edge(int u, int v) const {
  const int id = edge_id(u, v);
  if (id < 0) throw DomainError("not an edge: " + to_string(Edge(u, v)));
  std::vector<Edge> rest;
  rest.reserve(edges_.size() - 1);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    if (i != id) rest.push_back(edges_[i]);
  }
  return Graph(n_, std::move(rest));
}

Graph Graph::with_edge(int u, int v) const {
  if (adjacent(u, v)) throw DomainError("already an edge: " + to_string(Edge(u, v)));
  std::vector<Edge> more = edges_;
  more.emplace_back(u, v);
  return Graph(n_, std::move(more));
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degree_sequence.resize(g.order());
  for (int v = 0; v < g.order(); ++v) p.degree_sequence[v] = g.degree(v);
  p.min_degree = g.min_degree();
  p.max_degree = g.max_degree();
  return p;
}

Graph delete_edge(const Graph& g, int u, int v) { return g.without_edge(u, v); }

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram.
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(e));
}

}  // namespace critlab
