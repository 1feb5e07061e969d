#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "critlab/affine.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph.hpp"
#include "critlab/numeric.hpp"
#include "critlab/params.hpp"
#include "critlab/surd.hpp"

namespace critlab {

// ---- charge formulas ---------------------------------------------------------
//
// Written once over a scalar type T: Surd (exact), Interval (enclosures at the
// working precision) or AffineInDelta (Delta kept symbolic; rational omega).

template <class T>
struct Symbols {
  T d2;      // d + 2
  T omega;
  T delta;
  T g1q;     // (d+2)*omega/(d+2-omega)
  T lambda;
  T N;
};

Symbols<Surd> exact_symbols(const Params& p);
Symbols<Interval> interval_symbols(const Params& p);
/// DomainError when omega is irrational.
Symbols<AffineInDelta> symbolic_symbols(const Params& p);

template <class T>
T g1_of(const Symbols<T>& s, const T& k) {
  return s.d2 * (s.delta - k) / k;
}

template <class T>
T g2_of(const Symbols<T>& s, const T& k) {
  return s.omega * s.delta / (k - T(1));
}

template <class T>
T h_of(const Symbols<T>& s, const T& k, const T& l) {
  return (s.omega * s.delta - l * s.g1q) / (k - l - T(1));
}

/// (k-p-1-N) h(k, k-lambda*Delta-1) + (p+1+N) h(k, p).
template <class T>
T m_x1_of(const Symbols<T>& s, const T& k, const T& p) {
  const T l = k - s.lambda * s.delta - T(1);
  return (k - p - T(1) - s.N) * h_of(s, k, l) + (p + T(1) + s.N) * h_of(s, k, p);
}

/// sum_i [ (omega*Delta - (k-1) g1q)/(b_i+1) + g1q ] + (p+1) h(k,p).
template <class T>
T m_x2_of(const Symbols<T>& s, long k, long p, const std::vector<Rational>& b) {
  T sum(0);
  const T base = s.omega * s.delta - T(k - 1) * s.g1q;
  for (const Rational& bi : b) sum = sum + base / T(Rational(bi + 1)) + s.g1q;
  return sum + T(p + 1) * h_of(s, T(k), T(p));
}

/// Cauchy-Schwarz floor of m_x2 over real profiles with sum b_i <= p.
template <class T>
T m_x2_floor_of(const Symbols<T>& s, long k, long p) {
  const long r = k - p - 1;
  const T base = s.omega * s.delta - T(k - 1) * s.g1q;
  return T(ratio(r * r, k - 1)) * base + T(r) * s.g1q +
         T(ratio(p + 1, r)) * (s.omega * s.delta - T(p) * s.g1q);
}

// ---- exact entry points with domain checks -----------------------------------

Surd g1(const Params& p, const Surd& k);  // k > 0
Surd g2(const Params& p, const Surd& k);  // k > 1
/// h(k, l) for l <= k-2; DomainError otherwise.
Surd h(const Params& p, const Surd& k, const Surd& l);

/// Charge bound for x with eps*Delta <= k < q and 0 <= p <= k-2.
Surd m_lower_x1(const Surd& k, long p, const Params& params);
/// Charge bound for d <= k < eps*Delta, 0 <= p <= k-2. With b (k-p-1 entries,
/// sum <= p) the exact sum; without, the Cauchy-Schwarz floor.
Surd m_lower_x2(long k, long p, const Params& params, const std::optional<std::vector<Rational>>& b = std::nullopt);

/// 3*cbrt(k^2/(4(k-1))) - 1 - (d+2)/omega at the working precision.
Interval f1(const Rational& k, const Params& params);
/// The Claim-6 function f(k) at the working precision.
Interval f_claim6(const Rational& k, const Params& params);
/// f at k = eps*Delta.
Interval f_claim6_at_eps_delta(const Params& params);

/// (d+2+omega)/(2d+4+omega) * n; exact.
Surd theorem_bound(int d, long n);

// ---- graph level ---------------------------------------------------------------

struct XPartition {
  std::vector<int> X_pp;     // d(x) = Delta
  std::vector<int> X_p;      // q <= d(x) < Delta
  std::vector<int> X1m;      // eps*Delta <= d(x) < q
  std::vector<int> X2m;      // lower bound .. eps*Delta
  std::vector<int> X3m;      // d <= d(x) < 3(d-1), d in {3,4} only
  std::vector<int> below_d;  // d(x) < d; only reachable when forced
  std::string class_of(int v) const;  // "X++", "X+", ... or "" if not in X
};

/// DomainError when X is not independent (naming the edge) or when
/// Delta(G) differs from params.delta.
XPartition classify_X(const Graph& g, const std::vector<int>& X, const Params& params);

struct ChargeLedger {
  std::vector<std::string> role;  // "Y" or the X class
  std::vector<Surd> M0, M0s, M1, M1s, M2s, M2;
  Surd total_M0, total_M0s, total_M1, total_M1s, total_M2s;
  bool step0_conserved = false;
  bool steps12_conserved = false;
  bool x_identity = false;  // M0*(x) = M1(x) on X
  bool y_floor = false;     // M0*(y) >= M1(y) on Y
  bool y_independent = false;
  std::vector<int> satisfied;    // M2*(v) >= M2(v)
  std::vector<int> unsatisfied;
};

ChargeLedger run_discharging(const Graph& g, const std::vector<int>& X, const Params& params);

/// CSV: vertex,M0,M0*,M1,M1*,M2*,M2 with exact values.
void write_ledger_csv(std::ostream& out, const ChargeLedger& ledger);

}  // namespace critlab
