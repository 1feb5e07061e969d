#include "critlab/discharging.hpp"

#include <algorithm>
#include <map>

namespace critlab {

Symbols<Surd> exact_symbols(const Params& p) {
  return {Surd(p.d + 2), p.omega, Surd(p.delta), p.g1_at_q(), Surd(p.lambda), Surd(p.N)};
}

Symbols<Interval> interval_symbols(const Params& p) {
  return {Interval(static_cast<long>(p.d + 2)), p.omega.enclose(), Interval(p.delta), p.g1_at_q().enclose(),
          Interval(p.lambda), Interval(p.N)};
}

Symbols<AffineInDelta> symbolic_symbols(const Params& p) {
  const Surd g1q = p.g1_at_q();
  if (!p.omega.is_rational() || !g1q.is_rational()) {
    throw DomainError("symbolic Delta needs a rational omega (got " + p.omega_description + ")");
  }
  return {AffineInDelta(static_cast<long>(p.d + 2)), AffineInDelta(p.omega.rational()), AffineInDelta::delta(),
          AffineInDelta(g1q.rational()), AffineInDelta(p.lambda), AffineInDelta(p.N)};
}

Surd g1(const Params& p, const Surd& k) {
  if (k.sign() <= 0) throw DomainError("g1 needs k > 0");
  return g1_of(exact_symbols(p), k);
}

Surd g2(const Params& p, const Surd& k) {
  if (k <= Surd(1)) throw DomainError("g2 needs k > 1");
  return g2_of(exact_symbols(p), k);
}

Surd h(const Params& p, const Surd& k, const Surd& l) {
  if (l > k - Surd(2)) throw DomainError("h(k, l) needs l <= k-2 (got k=" + k.to_string() + ", l=" + l.to_string() + ")");
  return h_of(exact_symbols(p), k, l);
}

Surd m_lower_x1(const Surd& k, long p, const Params& params) {
  if (k < params.epsilon_delta() || k >= params.q) throw DomainError("m_lower_x1 needs eps*Delta <= k < q");
  if (p < 0 || Surd(p) > k - Surd(2)) throw DomainError("m_lower_x1 needs 0 <= p <= k-2");
  const Surd lam_delta = Surd(params.lambda) * Surd(params.delta);
  if (lam_delta < Surd(1)) throw DomainError("m_lower_x1 needs lambda*Delta >= 1");
  return m_x1_of(exact_symbols(params), k, Surd(p));
}

Surd m_lower_x2(long k, long p, const Params& params, const std::optional<std::vector<Rational>>& b) {
  if (k < params.d || Surd(k) >= params.epsilon_delta()) throw DomainError("m_lower_x2 needs d <= k < eps*Delta");
  if (p < 0 || p > k - 2) throw DomainError("m_lower_x2 needs 0 <= p <= k-2");
  const Symbols<Surd> s = exact_symbols(params);
  if (!b) return m_x2_floor_of(s, k, p);
  if (static_cast<long>(b->size()) != k - p - 1) {
    throw DomainError("profile needs k-p-1 = " + std::to_string(k - p - 1) + " entries");
  }
  Rational total = 0;
  for (const Rational& bi : *b) {
    if (bi < 0) throw DomainError("profile entries must be nonnegative");
    total += bi;
  }
  if (total > p) throw DomainError("profile sum " + to_string(total) + " exceeds p = " + std::to_string(p));
  return m_x2_of(s, k, p, *b);
}

Interval f1(const Rational& k, const Params& params) {
  if (k <= 1) throw DomainError("f1 needs k > 1");
  const Interval kk(k);
  const Interval inner = kk * kk / (Interval(4L) * (kk - Interval(1L)));
  return Interval(3L) * cbrt(inner) - Interval(1L) - Interval(static_cast<long>(params.d + 2)) / params.omega.enclose();
}

namespace {

Interval f_claim6_interval(const Interval& k, const Params& params) {
  const Symbols<Interval> s = interval_symbols(params);
  const Interval ld1 = s.lambda * s.delta + Interval(1L);
  const Interval bracket = Interval(2L) * sqrt(k / ld1) - s.N / ld1 - Interval(1L) - s.d2 / s.omega;
  return bracket * (s.omega * s.delta - k * s.g1q);
}

}  // namespace

Interval f_claim6(const Rational& k, const Params& params) {
  if (k <= 0) throw DomainError("f needs k > 0");
  return f_claim6_interval(Interval(k), params);
}

Interval f_claim6_at_eps_delta(const Params& params) {
  return f_claim6_interval(params.epsilon_delta().enclose(), params);
}

Surd theorem_bound(int d, long n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  return theorem_coefficient(d) * Surd(n);
}

// ---- graph level ---------------------------------------------------------------

std::string XPartition::class_of(int v) const {
  auto in = [v](const std::vector<int>& s) { return std::binary_search(s.begin(), s.end(), v); };
  if (in(X_pp)) return "X++";
  if (in(X_p)) return "X+";
  if (in(X1m)) return "X1-";
  if (in(X2m)) return "X2-";
  if (in(X3m)) return "X3-";
  if (in(below_d)) return "X<d";
  return "";
}

XPartition classify_X(const Graph& g, const std::vector<int>& X, const Params& params) {
  if (BigInt(g.max_degree()) != params.delta) {
    throw DomainError("Delta(G) = " + std::to_string(g.max_degree()) + " but the parameters use Delta = " +
                      to_string(params.delta));
  }
  std::vector<int> xs = X;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int v : xs) {
    if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (g.adjacent(xs[i], xs[j])) {
        throw DomainError("X is not independent: edge " + std::to_string(xs[i]) + "-" + std::to_string(xs[j]));
      }
    }
  }

  const bool split3 = params.d == 3 || params.d == 4;
  const Surd eps_delta = params.epsilon_delta();
  std::map<int, int> bucket_of_degree;  // 0..5 in the order of the fields
  XPartition part;
  std::vector<int>* buckets[] = {&part.X_pp, &part.X_p, &part.X1m, &part.X2m, &part.X3m, &part.below_d};
  for (int v : xs) {
    const int k = g.degree(v);
    auto it = bucket_of_degree.find(k);
    if (it == bucket_of_degree.end()) {
      const Surd sk(k);
      int b;
      if (k == g.max_degree()) b = 0;
      else if (sk >= params.q) b = 1;
      else if (sk >= eps_delta) b = 2;
      else if (k < params.d) b = 5;
      else if (split3 && k < 3 * params.d - 3) b = 4;
      else b = 3;
      it = bucket_of_degree.emplace(k, b).first;
    }
    buckets[it->second]->push_back(v);
  }
  return part;
}

ChargeLedger run_discharging(const Graph& g, const std::vector<int>& X, const Params& params) {
  const XPartition part = classify_X(g, X, params);
  const int n = g.order();
  ChargeLedger L;
  L.role.assign(n, "Y");
  std::vector<char> in_x(n, 0), plus(n, 0), minus(n, 0);
  auto mark = [&](const std::vector<int>& s, const char* name, std::vector<char>* flag) {
    for (int v : s) {
      L.role[v] = name;
      in_x[v] = 1;
      if (flag) (*flag)[v] = 1;
    }
  };
  mark(part.X_pp, "X++", nullptr);
  mark(part.X_p, "X+", &plus);
  mark(part.X1m, "X1-", &minus);
  mark(part.X2m, "X2-", &minus);
  mark(part.X3m, "X3-", &minus);
  mark(part.below_d, "X<d", &minus);

  const Symbols<Surd> s = exact_symbols(params);
  const Surd delta(params.delta);
  const Surd d2(params.d + 2);

  L.M0.assign(n, Surd(0));
  L.M1.assign(n, Surd(0));
  L.M2.assign(n, Surd(0));
  for (int v = 0; v < n; ++v) {
    if (in_x[v]) {
      L.M1[v] = d2 * Surd(g.degree(v));
      L.M2[v] = d2 * delta;
    } else {
      L.M0[v] = (d2 + params.omega) * delta;
      L.M1[v] = params.omega * delta;
    }
  }

  // Step 0.
  L.M0s = L.M0;
  for (int y = 0; y < n; ++y) {
    if (in_x[y]) continue;
    for (int x : g.neighbors(y)) {
      if (!in_x[x]) continue;
      L.M0s[y] -= d2;
      L.M0s[x] += d2;
    }
  }

  // Step 1, starting from M1.
  std::map<int, Surd> g1_cache;
  auto g1_at = [&](int k) -> const Surd& {
    auto it = g1_cache.find(k);
    if (it == g1_cache.end()) it = g1_cache.emplace(k, g1_of(s, Surd(k))).first;
    return it->second;
  };
  L.M1s = L.M1;
  for (int y = 0; y < n; ++y) {
    if (in_x[y]) continue;
    for (int x : g.neighbors(y)) {
      if (!plus[x]) continue;
      const Surd& give = g1_at(g.degree(x));
      L.M1s[y] -= give;
      L.M1s[x] += give;
    }
  }

  // Step 2: remaining positive charge split equally over X- neighbors.
  L.M2s = L.M1s;
  for (int y = 0; y < n; ++y) {
    if (in_x[y] || L.M1s[y].sign() <= 0) continue;
    std::vector<int> targets;
    for (int x : g.neighbors(y)) {
      if (minus[x]) targets.push_back(x);
    }
    if (targets.empty()) continue;
    const Surd share = L.M1s[y] / Surd(static_cast<long>(targets.size()));
    for (int x : targets) L.M2s[x] += share;
    L.M2s[y] = Surd(0);
  }

  auto total = [](const std::vector<Surd>& m) {
    Surd t(0);
    for (const Surd& v : m) t += v;
    return t;
  };
  L.total_M0 = total(L.M0);
  L.total_M0s = total(L.M0s);
  L.total_M1 = total(L.M1);
  L.total_M1s = total(L.M1s);
  L.total_M2s = total(L.M2s);
  L.step0_conserved = L.total_M0 == L.total_M0s;
  L.steps12_conserved = L.total_M1 == L.total_M1s && L.total_M1s == L.total_M2s;

  L.x_identity = true;
  L.y_floor = true;
  L.y_independent = true;
  for (int v = 0; v < n; ++v) {
    if (in_x[v]) {
      if (L.M0s[v] != L.M1[v]) L.x_identity = false;
    } else {
      if (L.M0s[v] < L.M1[v]) L.y_floor = false;
      for (int u : g.neighbors(v)) {
        if (!in_x[u]) L.y_independent = false;
      }
    }
    (L.M2s[v] >= L.M2[v] ? L.satisfied : L.unsatisfied).push_back(v);
  }
  return L;
}

void write_ledger_csv(std::ostream& out, const ChargeLedger& L) {
  auto cell = [](const Surd& v) {
    std::string s = v.to_string();
    if (s.find(',') != std::string::npos) s = "\"" + s + "\"";
    return s;
  };
  out << "vertex,M0,M0*,M1,M1*,M2*,M2\n";
  for (std::size_t v = 0; v < L.role.size(); ++v) {
    out << v << ',' << cell(L.M0[v]) << ',' << cell(L.M0s[v]) << ',' << cell(L.M1[v]) << ','
        << cell(L.M1s[v]) << ',' << cell(L.M2s[v]) << ',' << cell(L.M2[v]) << '\n';
  }
}

}  // namespace critlab
