#include "critlab/params.hpp"

#include "critlab/errors.hpp"

namespace critlab {

bool default_supports(int d) { return d == 3 || d == 4 || d >= 19; }

OmegaPtr default_omega(int d) {
  if (d == 3 || d == 4) return std::make_shared<const Omega>(Omega::rational(2));
  if (d >= 19) return std::make_shared<const Omega>(Omega::cube_root(Rational(static_cast<long>(d - 1) * d)));
  throw UnsupportedParameter("omega is only defined for d in {3,4} or d >= 19 (got d=" + std::to_string(d) + ")");
}

Surd theorem_coefficient(int d) {
  OmegaPtr field = default_omega(d);
  const Surd w = Surd::omega(field);
  return (Surd(d + 2) + w) / (Surd(2 * d + 4) + w);
}

BigInt f_numerator(const BigInt& c) {
  return ((((3 * c + 19) * c + 34) * c + 27) * c + 11) * c + 2;
}

LemmaConstants lemma_constants(const Surd& epsilon, const Rational& lambda) {
  if (epsilon.sign() <= 0 || lambda <= 0) throw DomainError("epsilon and lambda must be positive");
  LemmaConstants k;
  const Surd one(1);
  // c0 is the least integer c with c >= (1-eps)/eps.
  k.c0 = ((one - epsilon) / epsilon).ceil();
  if (k.c0 < 0 || k.c0 > 1000) throw DomainError("c0 = " + to_string(k.c0) + " outside the supported range");
  k.f_eps = Surd(f_numerator(k.c0)) / epsilon;
  const unsigned exponent = static_cast<unsigned>(3 * k.c0.get_ui() + 2);
  k.N = Rational(k.c0 + 2) * pow(Rational(1) / lambda + 1, exponent);

  const Surd t2 = Surd(Rational(3 * k.c0 + 2) / (lambda * lambda));
  const Surd t3 = Surd(k.N + 1) / (epsilon * epsilon * epsilon);
  k.D0 = k.f_eps;
  k.d0_term = "f(eps)";
  if (t2 > k.D0) {
    k.D0 = t2;
    k.d0_term = "(3c0+2)/lambda^2";
  }
  if (t3 > k.D0) {
    k.D0 = t3;
    k.d0_term = "(N+1)/eps^3";
  }
  k.d0_ceiling = k.D0.ceil();
  return k;
}

Surd Params::g1_at_q() const {
  return Surd(d + 2) * (Surd(delta) - q) / q;
}

namespace {

void derive(Params& p) {
  LemmaConstants k = lemma_constants(p.epsilon, p.lambda);
  p.c0 = std::move(k.c0);
  p.f_eps = std::move(k.f_eps);
  p.N = std::move(k.N);
  p.D0 = std::move(k.D0);
  p.d0_term = std::move(k.d0_term);
  p.d0_ceiling = std::move(k.d0_ceiling);
}

void check_unit(const Surd& v, const char* name) {
  if (v.sign() <= 0 || (v - Surd(1)).sign() >= 0) {
    throw DomainError(std::string(name) + " = " + v.to_string() + " must lie in (0,1)");
  }
}

}  // namespace

Params make_params(int d, const BigInt& delta, const ParamOptions& raw) {
  // Overrides may arrive as uncanonicalized mpq values; equality tests downstream need the reduced form.
  ParamOptions options = raw;
  for (std::optional<Rational>* q : {&options.omega_value, &options.epsilon, &options.lambda})
    if (*q) (*q)->canonicalize();
  if (d < 1) throw UnsupportedParameter("d must be positive (got " + std::to_string(d) + ")");
  if (delta < 1) throw DomainError("Delta must be at least 1");
  if (options.omega_value && options.omega_cbrt) throw UnsupportedParameter("give one omega override, not two");
  const bool override_omega = options.omega_value.has_value() || options.omega_cbrt;
  if (!default_supports(d) && !override_omega) {
    throw UnsupportedParameter("d=" + std::to_string(d) +
                               " is outside the supported range (d in {3,4} or d >= 19); "
                               "the constants are not defined for 5 <= d <= 18 or d < 3. "
                               "Use --omega-override to explore anyway");
  }

  Params p;
  p.d = d;
  p.delta = delta;
  if (options.omega_value) {
    if (*options.omega_value <= 0) throw DomainError("omega override must be positive");
    p.field = std::make_shared<const Omega>(Omega::rational(*options.omega_value));
  } else if (options.omega_cbrt) {
    p.field = std::make_shared<const Omega>(Omega::cube_root(Rational(static_cast<long>(d - 1) * d)));
  } else {
    p.field = default_omega(d);
  }
  p.omega_description = p.field->describe();
  p.outside_default_range = override_omega || options.epsilon || options.lambda;
  if (override_omega && default_supports(d) && *p.field == *default_omega(d)) {
    p.outside_default_range = options.epsilon.has_value() || options.lambda.has_value();
  }

  p.omega = Surd::omega(p.field);
  const Surd dp2(d + 2);
  if (p.omega >= dp2) throw DomainError("omega must be below d+2");
  p.epsilon = options.epsilon ? Surd(*options.epsilon) : p.omega / dp2;
  // omega^3 is rational, so lambda always is.
  p.lambda = options.lambda ? *options.lambda
                            : p.field->cube() / (2 * pow(Rational(d + 2), 3));
  check_unit(p.epsilon, "epsilon");
  check_unit(Surd(p.lambda), "lambda");
  p.q = options.epsilon ? (Surd(1) - p.epsilon) * Surd(delta) : (dp2 - p.omega) / dp2 * Surd(delta);
  derive(p);
  return p;
}

Params with_delta(const Params& base, const BigInt& delta) {
  if (delta < 1) throw DomainError("Delta must be at least 1");
  Params p = base;
  p.delta = delta;
  p.q = (Surd(1) - p.epsilon) * Surd(delta);
  return p;
}

}  // namespace critlab
