#include "doctest.h"

#include "critlab/affine.hpp"
#include "critlab/errors.hpp"
#include "critlab/numeric.hpp"
#include "critlab/surd.hpp"

using namespace critlab;

TEST_CASE("rational parsing and rounding") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_bigint("3/2"), ParseError);
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(ceil(Rational(4)) == 4);
  CHECK(to_string(Rational(20, 3)) == "20/3");
}

TEST_CASE("intervals enclose exact values") {
  PrecisionScope scope(64);
  const Interval third = Interval(1L) / Interval(3L);
  CHECK(third.contains(Rational(1, 3)));
  CHECK(third.positive());
  CHECK(third.certain_sign() == 1);
  CHECK(third.lo_rational() < Rational(1, 3));
  CHECK(third.hi_rational() > Rational(1, 3));
  const Interval zero = third - third;
  CHECK(zero.certain_sign() == 0);
  // sqrt(2)^2 straddles 2 and never excludes it.
  const Interval s = sqrt(Interval(2L));
  CHECK((s * s).contains(Rational(2)));
}

TEST_CASE("precision scope is restored") {
  const auto before = working_precision();
  {
    PrecisionScope scope(512);
    CHECK(working_precision() == 512);
    CHECK(Interval(1L).precision() == 512);
  }
  CHECK(working_precision() == before);
}

TEST_CASE("cube root of 342") {
  // Frozen from a 40-digit mpmath evaluation: 6.9931906571808681609...
  auto w = std::make_shared<const Omega>(Omega::cube_root(Rational(342)));
  CHECK_FALSE(w->is_rational());
  CHECK(w->describe() == "cbrt(342)");
  PrecisionScope scope(128);
  const Interval e = w->enclose();
  CHECK(e.lo_rational() > parse_rational("6.993190657180868"));
  CHECK(e.hi_rational() < parse_rational("6.993190657180869"));
}

TEST_CASE("cube roots of perfect cubes fold to rationals") {
  const Omega w = Omega::cube_root(Rational(8));
  CHECK(w.is_rational());
  CHECK(w.value() == 2);
  const Omega h = Omega::cube_root(Rational(27, 8));
  CHECK(h.value() == Rational(3, 2));
}

TEST_CASE("surd arithmetic in Q(cbrt 342)") {
  auto field = std::make_shared<const Omega>(Omega::cube_root(Rational(342)));
  const Surd w = Surd::omega(field);
  CHECK(w * w * w == Surd(342));
  CHECK((w / w) == Surd(1));
  CHECK((w.inverse() * w) == Surd(1));
  CHECK(w.floor() == 6);
  CHECK(w.ceil() == 7);
  CHECK(w > Surd(Rational(6993, 1000)));
  CHECK(w < Surd(ratio(6994, 1000)));
  CHECK((w - w).sign() == 0);
  const Surd x = Surd(Rational(1, 2)) + Surd(3) * w;
  CHECK(x.to_string().find("w") != std::string::npos);
  CHECK((x - Surd(Rational(1, 2))) / Surd(3) == w);
  // (21 + w)/(42 + w) is just below 4/7.
  const Surd coef = (Surd(21) + w) / (Surd(42) + w);
  CHECK(coef < Surd(Rational(4, 7)));
  CHECK(coef > Surd(Rational(5713, 10000)));
}

TEST_CASE("surd with rational omega stays rational") {
  auto field = std::make_shared<const Omega>(Omega::rational(Rational(2)));
  const Surd w = Surd::omega(field);
  CHECK(w.is_rational());
  CHECK(w.rational() == 2);
  CHECK((Surd(5) / w).rational() == Rational(5, 2));
}

TEST_CASE("affine forms in Delta") {
  const AffineInDelta D = AffineInDelta::delta();
  const AffineInDelta m = AffineInDelta(Rational(20, 3)) * D - AffineInDelta(39);
  CHECK(m.to_string() == "20/3*D - 39");
  CHECK(m.at(Rational(3)) == Rational(-19));
  CHECK((D - D).is_constant());
  CHECK_THROWS_AS(D * D, DomainError);
  CHECK_THROWS_AS(AffineInDelta(1) / D, DomainError);
  CHECK((AffineInDelta(6) * (D - AffineInDelta(6))).to_string() == "6*D - 36");
}
