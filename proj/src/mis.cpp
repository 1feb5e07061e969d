#include "critlab/mis.hpp"

#include <algorithm>
#include <bit>

#include "critlab/errors.hpp"
#include "critlab/params.hpp"
#include "critlab/surd.hpp"

namespace critlab {

namespace {

using Word = std::uint64_t;

class VertexSet {
 public:
  explicit VertexSet(int n) : bits_((n + 63) / 64, 0) {}
  void set(int v) { bits_[v / 64] |= Word{1} << (v % 64); }
  void reset(int v) { bits_[v / 64] &= ~(Word{1} << (v % 64)); }
  bool test(int v) const { return (bits_[v / 64] >> (v % 64)) & 1U; }
  bool empty() const {
    return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
  }
  int count() const {
    int c = 0;
    for (Word w : bits_) c += std::popcount(w);
    return c;
  }
  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      for (Word w = bits_[i]; w; w &= w - 1) f(static_cast<int>(i * 64 + std::countr_zero(w)));
    }
  }
  int count_and(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) c += std::popcount(bits_[i] & o.bits_[i]);
    return c;
  }
  void and_not(const VertexSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  }
  void and_with(const VertexSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  }

 private:
  std::vector<Word> bits_;
};

class Solver {
 public:
  explicit Solver(const Graph& g) : g_(g) {
    for (int v = 0; v < g.order(); ++v) {
      VertexSet row(g.order());
      for (int w : g.neighbors(v)) row.set(w);
      rows_.push_back(std::move(row));
    }
  }

  IndependentSetResult run() {
    VertexSet all(g_.order());
    for (int v = 0; v < g_.order(); ++v) all.set(v);
    std::vector<int> chosen;
    search(all, chosen);
    IndependentSetResult out;
    out.alpha = static_cast<int>(best_.size());
    out.witness = best_;
    std::sort(out.witness.begin(), out.witness.end());
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  // Number of cliques in a greedy cover of P; an upper bound on alpha(G[P]).
  int clique_cover(const VertexSet& p) const {
    VertexSet left = p;
    int cliques = 0;
    while (!left.empty()) {
      ++cliques;
      VertexSet cand = left;
      // Grow a clique from the lowest vertex, adding lowest-index candidates.
      while (!cand.empty()) {
        int v = -1;
        cand.for_each([&](int w) {
          if (v < 0) v = w;
        });
        left.reset(v);
        cand.reset(v);
        cand.and_with(rows_[v]);
      }
    }
    return cliques;
  }

  void search(const VertexSet& p, std::vector<int>& chosen) {
    ++nodes_;
    if (p.empty()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (static_cast<int>(chosen.size()) + clique_cover(p) <= static_cast<int>(best_.size())) return;

    int pivot = -1;
    int pivot_deg = -1;
    p.for_each([&](int v) {
      const int deg = rows_[v].count_and(p);
      if (deg > pivot_deg) {
        pivot = v;
        pivot_deg = deg;
      }
    });

    if (pivot_deg == 0) {
      const std::size_t before = chosen.size();
      p.for_each([&](int v) { chosen.push_back(v); });
      if (chosen.size() > best_.size()) best_ = chosen;
      chosen.resize(before);
      return;
    }

    VertexSet with = p;
    with.reset(pivot);
    with.and_not(rows_[pivot]);
    chosen.push_back(pivot);
    search(with, chosen);
    chosen.pop_back();

    VertexSet without = p;
    without.reset(pivot);
    search(without, chosen);
  }

  const Graph& g_;
  std::vector<VertexSet> rows_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
};

BoundCheck rational_check(std::string name, std::string relation, const Rational& bound, int alpha) {
  BoundCheck c;
  c.name = std::move(name);
  c.relation = std::move(relation);
  c.bound = to_string(bound);
  c.holds = c.relation == "<" ? Rational(alpha) < bound : Rational(alpha) <= bound;
  return c;
}

// Largest d <= min degree for which the theorem is stated.
std::optional<int> theorem_d(int min_degree) {
  if (min_degree >= 19) return min_degree;
  if (min_degree >= 4) return 4;
  if (min_degree == 3) return 3;
  return std::nullopt;
}

}  // namespace

IndependentSetResult max_independent_set(const Graph& g) {
  IndependentSetResult r = Solver(g).run();
  if (!is_independent(g, r.witness) || static_cast<int>(r.witness.size()) != r.alpha) {
    throw std::logic_error("independent set witness failed re-verification");
  }
  return r;
}

bool is_independent(const Graph& g, const std::vector<int>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 0 || set[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
  }
  return true;
}

BoundReport bound_report(const Graph& g, int alpha) { return bound_report(g.order(), g.min_degree(), alpha); }

BoundReport bound_report(int n, int min_degree, int alpha) {
  BoundReport r;
  r.n = n;
  r.alpha = alpha;
  r.min_degree = min_degree;
  r.checks.push_back(rational_check("n/2", "<=", ratio(n, 2), alpha));
  r.checks.push_back(rational_check("3n/5", "<", ratio(3 * n, 5), alpha));

  if (min_degree >= 2) {
    const int d = min_degree;
    BoundCheck c = rational_check("(d+4)/(2d+6)n", "<", ratio(static_cast<long>(d + 4) * n, 2 * d + 6), alpha);
    c.note = "d=" + std::to_string(d);
    r.checks.push_back(std::move(c));
  } else {
    BoundCheck c;
    c.name = "(d+4)/(2d+6)n";
    c.relation = "<";
    c.applicable = false;
    c.note = "needs minimum degree >= 2";
    r.checks.push_back(std::move(c));
  }

  BoundCheck t;
  t.name = "theorem";
  t.relation = "<";
  if (auto d = theorem_d(min_degree)) {
    const Surd coeff = theorem_coefficient(*d);
    const Surd bound = coeff * Surd(n);
    t.bound = bound.to_string();
    t.holds = Surd(alpha) < bound;
    t.note = "d=" + std::to_string(*d) + "; stated only for Delta >= (d+2)^(5d+10)";
  } else {
    t.applicable = false;
    t.note = "needs minimum degree >= 3";
  }
  r.checks.push_back(std::move(t));
  return r;
}

}  // namespace critlab
