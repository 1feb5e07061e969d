#pragma once

#include <optional>
#include <string>

#include "critlab/numeric.hpp"
#include "critlab/surd.hpp"

namespace critlab {

struct ParamOptions {
  /// Rational omega, or the cube root of (d-1)d when `omega_cbrt` is set.
  /// Either one unlocks d outside {3,4} and d >= 19.
  std::optional<Rational> omega_value;
  bool omega_cbrt = false;
  /// Replace the derived epsilon / lambda. q then becomes (1-eps)*Delta.
  std::optional<Rational> epsilon;
  std::optional<Rational> lambda;
};

/// c0, f(eps), N and D0 for a given (eps, lambda).
struct LemmaConstants {
  BigInt c0;
  Surd f_eps;
  Rational N;
  Surd D0;
  std::string d0_term;  // "f(eps)", "(3c0+2)/lambda^2" or "(N+1)/eps^3"
  BigInt d0_ceiling;
};

LemmaConstants lemma_constants(const Surd& epsilon, const Rational& lambda);

/// The constant family for one (d, Delta). Every value is exact: omega lives
/// in Q(cbrt((d-1)d)) and everything else is rational or a Surd over it.
struct Params {
  int d = 0;
  BigInt delta;
  OmegaPtr field;
  Surd omega;
  Surd epsilon;
  Rational lambda;
  Surd q;
  BigInt c0;
  Surd f_eps;
  Rational N;
  Surd D0;
  std::string d0_term;  // "f(eps)", "(3c0+2)/lambda^2" or "(N+1)/eps^3"
  BigInt d0_ceiling;
  /// Set when omega, epsilon or lambda do not follow the defaults for d.
  bool outside_default_range = false;
  std::string omega_description;

  /// (d+2)*omega/(d+2-omega), the value of g1 at q.
  Surd g1_at_q() const;
  Surd epsilon_delta() const { return epsilon * Surd(delta); }
};

bool default_supports(int d);

/// Throws UnsupportedParameter for d in [5,18] or d < 3 without an omega
/// override, and DomainError when Delta < 1 or a constant leaves (0,1).
Params make_params(int d, const BigInt& delta, const ParamOptions& options = {});

/// Same constants at a new Delta.
Params with_delta(const Params& p, const BigInt& delta);

/// omega for d in {3,4} and d >= 19.
OmegaPtr default_omega(int d);

/// (d+2+omega)/(2d+4+omega).
Surd theorem_coefficient(int d);

/// 3c^5 + 19c^4 + 34c^3 + 27c^2 + 11c + 2.
BigInt f_numerator(const BigInt& c0);

}  // namespace critlab
