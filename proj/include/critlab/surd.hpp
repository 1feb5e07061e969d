#pragma once

// Exact arithmetic in Q(omega) where omega is the positive real cube root of a
// positive rational. Covers omega = 2 (rational) as well as cbrt((d-1)d).

#include <memory>
#include <string>

#include "critlab/numeric.hpp"

namespace critlab {

class Omega {
 public:
  static Omega rational(const Rational& value);
  /// Folds to a rational omega when the radicand is a perfect cube.
  static Omega cube_root(const Rational& radicand);

  const Rational& cube() const { return cube_; }
  bool is_rational() const { return rational_; }
  /// Requires is_rational().
  const Rational& value() const;

  /// Enclosure at the current working precision.
  Interval enclose() const;
  /// "2", "5/2" or "cbrt(342)".
  std::string describe() const;

  friend bool operator==(const Omega& a, const Omega& b) { return a.cube_ == b.cube_; }

 private:
  Omega(Rational cube, bool rational, Rational value);
  Rational cube_;
  bool rational_;
  Rational value_;
};

using OmegaPtr = std::shared_ptr<const Omega>;

/// a + b*omega + c*omega^2. When omega is rational the value is folded into a.
/// {1, omega, omega^2} is a Q-basis otherwise, so equality is componentwise
/// and the sign of a nonzero element is decided by refining an enclosure.
class Surd {
 public:
  Surd() = default;
  Surd(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& value) : a_(value) {}  // NOLINT
  Surd(const BigInt& value) : a_(value) {}  // NOLINT
  Surd(OmegaPtr field, Rational a, Rational b, Rational c);

  static Surd omega(const OmegaPtr& field);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const OmegaPtr& field() const { return field_; }

  bool is_rational() const { return b_ == 0 && c_ == 0; }
  /// Requires is_rational().
  const Rational& rational() const;

  int sign() const;
  BigInt floor() const;
  BigInt ceil() const;
  Interval enclose() const;
  double approx() const;
  /// "7/2", "3*w" or "1/2 + 3*w" where w is the field generator.
  std::string to_string() const;

  Surd& operator+=(const Surd& rhs);
  Surd& operator-=(const Surd& rhs);
  Surd& operator*=(const Surd& rhs);
  Surd& operator/=(const Surd& rhs);
  Surd operator-() const;
  Surd inverse() const;

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  friend bool operator==(const Surd& x, const Surd& y);
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return (x - y).sign() >= 0; }

 private:
  void adopt(const OmegaPtr& other);
  void fold();

  OmegaPtr field_;
  Rational a_{0};
  Rational b_{0};
  Rational c_{0};
};

}  // namespace critlab
