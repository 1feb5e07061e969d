#pragma once

// Exact rationals (GMP) and outward-rounded intervals (MPFR).

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace critlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor skips
/// canonicalization, and comparisons assume it.
inline Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Accepts "7", "-7/2", "0.25", "1e6" and "10^6".
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

/// Working precision (bits) used for every Interval created on this thread.
mpfr_prec_t working_precision();

/// RAII override of the thread-local working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Closed interval [lo, hi] with endpoints rounded outward, so every
/// operation returns an enclosure of the exact result.
class Interval {
 public:
  Interval();
  Interval(long value);  // NOLINT(google-explicit-constructor)
  Interval(const Rational& value);  // NOLINT
  Interval(const BigInt& value);  // NOLINT
  Interval(const Rational& lo, const Rational& hi);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool nonnegative() const { return mpfr_sgn(lo_) >= 0; }
  bool contains(const Rational& value) const;
  /// Sign if sign-definite, 0 when the interval straddles (or touches) zero.
  int certain_sign() const;

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double width_double() const;

  /// Decimal endpoints, rounded outward, in scientific notation.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;

  /// Exact rational value of the endpoints.
  Rational lo_rational() const;
  Rational hi_rational() const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  Interval operator-() const;

  friend Interval sqrt(const Interval& x);
  friend Interval cbrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);
  /// Convex hull.
  friend Interval hull(const Interval& a, const Interval& b);

 private:
  struct Uninit {};
  explicit Interval(Uninit);

  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace critlab
