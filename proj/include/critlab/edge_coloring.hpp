#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

/// Small ordered set of colors. Backed by a sorted vector so iteration order
/// is the lowest-first tie-breaking order used everywhere.
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<int> colors);
  explicit ColorSet(std::vector<int> colors);
  static ColorSet range(int lo, int hi);  // [lo, hi]

  bool contains(int c) const;
  void insert(int c);
  void erase(int c);
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  int lowest() const { return items_.front(); }
  const std::vector<int>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend ColorSet operator|(const ColorSet& a, const ColorSet& b);
  friend ColorSet operator&(const ColorSet& a, const ColorSet& b);
  friend ColorSet operator-(const ColorSet& a, const ColorSet& b);
  friend bool operator==(const ColorSet&, const ColorSet&) = default;
  bool subset_of(const ColorSet& other) const;
  bool disjoint(const ColorSet& other) const { return (*this & other).empty(); }

  std::string to_string() const;  // "{1,2,3}"

 private:
  std::vector<int> items_;
};

/// Partial proper edge coloring with colors 1..k. Color 0 means uncolored.
/// The per-vertex table via(v, c) gives the neighbor reached from v along the
/// edge colored c, so present/missing queries are O(1).
class EdgeColoring {
 public:
  EdgeColoring(std::shared_ptr<const Graph> graph, int k);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  int colors() const { return k_; }

  int color(int edge_id) const { return edge_color_[edge_id]; }
  /// Color of uv; DomainError when uv is not an edge.
  int color(int u, int v) const;
  int via(int v, int c) const { return via_[slot(v, c)]; }
  bool is_missing(int v, int c) const { return via(v, c) < 0; }

  ColorSet present(int v) const;
  ColorSet missing(int v) const;
  int colored_degree(int v) const { return colored_degree_[v]; }
  std::size_t colored_edges() const { return colored_; }
  bool is_total() const { return colored_ == graph_->size(); }
  int max_color_used() const;
  std::vector<int> uncolored_edges() const;

  // In-place primitives. They keep palettes in sync and reject improper moves.
  void paint(int edge_id, int c);
  void erase(int edge_id);
  /// Swaps a and b on the (a,b)-component through v; returns its edge ids.
  std::vector<int> swap_chain(int v, int a, int b);
  /// Edge ids of the (a,b)-component through v, in walk order from v.
  std::vector<int> chain(int v, int a, int b) const;

  /// Same assignment under a different palette size; DomainError if some
  /// edge carries a color above k.
  EdgeColoring with_colors(int k) const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return *a.graph_ == *b.graph_ && a.k_ == b.k_ && a.edge_color_ == b.edge_color_;
  }

 private:
  std::size_t slot(int v, int c) const { return static_cast<std::size_t>(v) * (k_ + 1) + c; }

  std::shared_ptr<const Graph> graph_;
  int k_;
  std::vector<int> edge_color_;
  std::vector<int> via_;
  std::vector<int> colored_degree_;
  std::size_t colored_ = 0;
};

/// Full scan: every color in range and no two edges at a vertex share one.
/// Independent of the maintained palettes.
bool is_proper(const EdgeColoring& c);

EdgeColoring color_edge(const EdgeColoring& c, int u, int v, int alpha);
EdgeColoring uncolor_edge(const EdgeColoring& c, int u, int v);
EdgeColoring kempe_swap(const EdgeColoring& c, int v, int alpha, int beta);

/// Misra-Gries fan recoloring; total proper coloring with k = Delta + 1.
EdgeColoring vizing_color(const Graph& g);
EdgeColoring vizing_color(std::shared_ptr<const Graph> g);
/// Colors one uncolored edge in place; requires k >= Delta + 1.
void fan_color_edge(EdgeColoring& c, int edge_id);

enum class Tri { False, True, Unknown };
std::string to_string(Tri t);

enum class ClassVerdict { Class1, Class2, Unknown };
std::string to_string(ClassVerdict v);

struct ColorabilityResult {
  Tri colorable = Tri::Unknown;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
};

/// Exhaustive search for a proper k-edge-coloring. Budget counts decision
/// nodes; running out yields Tri::Unknown. Supports k <= 63.
ColorabilityResult edge_colorable(const Graph& g, int k, std::uint64_t budget);

struct ClassResult {
  ClassVerdict verdict = ClassVerdict::Unknown;
  std::optional<EdgeColoring> witness;  // Delta-coloring when Class1
  std::uint64_t budget_spent = 0;
  std::optional<int> chromatic_index;
};

ClassResult chromatic_index(const Graph& g, std::uint64_t budget);

struct CriticalityResult {
  Tri verdict = Tri::Unknown;
  std::optional<Edge> failing_edge;
  std::string reason;
  std::uint64_t budget_spent = 0;
};

CriticalityResult is_delta_critical(const Graph& g, std::uint64_t budget);

struct DeltaColoringResult {
  std::optional<EdgeColoring> coloring;  // over g, with xy uncolored
  std::string method;                    // "vizing", "kempe", "search" or "none"
  std::uint64_t nodes = 0;
};

/// A Delta(G)-coloring of G - xy, expressed as a coloring of G that leaves xy
/// uncolored. Tries the fan coloring, then Kempe descent on leftover edges,
/// then exact search.
DeltaColoringResult delta_coloring_without(std::shared_ptr<const Graph> g, int x, int y, std::uint64_t budget);

}  // namespace critlab
