#include "doctest.h"

#include "critlab/errors.hpp"
#include "critlab/params.hpp"

using namespace critlab;

// Expected constants below were computed with Python's fractions module from
// c0 = ceil((1-eps)/eps), N = (c0+2)(1/lambda+1)^(3c0+2), D0 = (N+1)/eps^3.

TEST_CASE("d = 3") {
  const Params p = make_params(3, BigInt(1000000));
  CHECK(p.omega == Surd(2));
  CHECK(p.epsilon == Surd(Rational(2, 5)));
  CHECK(p.lambda == Rational(4, 125));
  CHECK(p.q == Surd(600000));
  CHECK(p.c0 == 2);
  CHECK(p.N == Rational(BigInt("76686282021340161"), BigInt(16384)));
  CHECK(p.D0 == Surd(Rational(BigInt("9585785252669568125"), BigInt(131072))));
  CHECK(p.d0_term == "(N+1)/eps^3");
  CHECK(p.d0_ceiling == BigInt("73133737584455"));
  CHECK_FALSE(p.outside_default_range);
  CHECK(p.g1_at_q() == Surd(Rational(10, 3)));  // 5*2/(5-2)
}

TEST_CASE("d = 4") {
  const Params p = make_params(4, BigInt(1000000));
  CHECK(p.epsilon == Surd(Rational(1, 3)));
  CHECK(p.lambda == Rational(1, 54));
  CHECK(p.c0 == 2);
  CHECK(p.N == Rational(BigInt("334935751562500")));
  CHECK(p.d0_ceiling == BigInt("9043265292187527"));
  CHECK(p.g1_at_q() == Surd(3));
}

TEST_CASE("d = 19 lives in Q(cbrt 342)") {
  const Params p = make_params(19, BigInt(1000000));
  CHECK_FALSE(p.omega.is_rational());
  CHECK(p.omega * p.omega * p.omega == Surd(342));
  CHECK(p.lambda == Rational(19, 1029));
  CHECK(p.c0 == 3);
  CHECK(p.N == Rational(BigInt("8374215128516275904865615227125760"), BigInt("116490258898219")));
  CHECK(p.d0_ceiling == BigInt("1946642859769578101718"));
  CHECK(p.omega_description == "cbrt(342)");
}

TEST_CASE("unsupported d and overrides") {
  CHECK_THROWS_AS(make_params(5, BigInt(100)), UnsupportedParameter);
  CHECK_THROWS_AS(make_params(18, BigInt(100)), UnsupportedParameter);
  CHECK_THROWS_AS(make_params(2, BigInt(100)), UnsupportedParameter);
  CHECK_THROWS_AS(make_params(3, BigInt(0)), DomainError);

  ParamOptions o;
  o.omega_value = Rational(3);
  const Params p = make_params(7, BigInt(1000), o);
  CHECK(p.outside_default_range);
  CHECK(p.epsilon == Surd(Rational(1, 3)));

  ParamOptions same;
  same.omega_value = Rational(2);
  CHECK_FALSE(make_params(3, BigInt(1000), same).outside_default_range);
  same.omega_value = Rational(BigInt(4), BigInt(2));  // unreduced on purpose
  const Params reduced = make_params(3, BigInt(1000), same);
  CHECK_FALSE(reduced.outside_default_range);
  CHECK(reduced.epsilon == Surd(Rational(2, 5)));

  ParamOptions bad;
  bad.omega_value = Rational(5);
  CHECK_THROWS_AS(make_params(3, BigInt(1000), bad), DomainError);

  ParamOptions two;
  two.omega_value = Rational(2);
  two.omega_cbrt = true;
  CHECK_THROWS_AS(make_params(3, BigInt(1000), two), UnsupportedParameter);

  ParamOptions eps;
  eps.epsilon = Rational(1, 4);
  const Params e = make_params(3, BigInt(1000), eps);
  CHECK(e.outside_default_range);
  CHECK(e.q == Surd(750));
  CHECK(e.c0 == 3);
  eps.epsilon = Rational(3, 2);
  CHECK_THROWS_AS(make_params(3, BigInt(1000), eps), DomainError);
}

TEST_CASE("theorem coefficient and helpers") {
  CHECK(theorem_coefficient(3) == Surd(Rational(7, 12)));
  CHECK(theorem_coefficient(4) == Surd(Rational(4, 7)));
  CHECK(theorem_coefficient(19) < Surd(Rational(4, 7)));
  CHECK(f_numerator(BigInt(2)) == 804);
  CHECK(with_delta(make_params(3, BigInt(10)), BigInt(20)).q == Surd(12));
}
