#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace critlab {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 0..n-1. Immutable once built; every
/// "modification" returns a new value.
class Graph {
 public:
  static constexpr int kMaxVertices = 1024;

  Graph() : Graph(1, {}) {}
  /// Throws DomainError on loops, parallel edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(int u, int v) const;
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }

  /// Lexicographically sorted edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Index into edges(), or -1 when uv is not an edge.
  int edge_id(int u, int v) const;

  bool connected() const;

  Graph without_edge(int u, int v) const;
  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<int> adj_;        // sorted neighbor lists, CSR
  std::vector<int> slot_edge_;  // adj_ slot -> edge id
  std::vector<std::uint64_t> rows_;
  int words_ = 0;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degree_sequence;  // indexed by vertex
};

DegreeProfile degree_profile(const Graph& g);

/// G - uv; DomainError when uv is not an edge.
Graph delete_edge(const Graph& g, int u, int v);

// Small named graphs used throughout the tests and docs.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

}  // namespace critlab
