#pragma once

#include <string>

#include "critlab/errors.hpp"
#include "critlab/numeric.hpp"

namespace critlab {

/// constant + slope * Delta, with Delta kept symbolic. Products of two
/// non-constant forms and division by a non-constant form are rejected, which
/// is enough for the charge bounds once omega is rational.
class AffineInDelta {
 public:
  AffineInDelta() = default;
  AffineInDelta(long value) : constant_(value) {}  // NOLINT(google-explicit-constructor)
  AffineInDelta(const Rational& value) : constant_(value) {}  // NOLINT
  AffineInDelta(Rational constant, Rational slope) : constant_(std::move(constant)), slope_(std::move(slope)) {}

  static AffineInDelta delta() { return AffineInDelta(0, 1); }

  const Rational& constant() const { return constant_; }
  const Rational& slope() const { return slope_; }
  bool is_constant() const { return slope_ == 0; }

  Rational at(const Rational& delta) const { return constant_ + slope_ * delta; }

  AffineInDelta& operator+=(const AffineInDelta& rhs) {
    constant_ += rhs.constant_;
    slope_ += rhs.slope_;
    return *this;
  }
  AffineInDelta& operator-=(const AffineInDelta& rhs) {
    constant_ -= rhs.constant_;
    slope_ -= rhs.slope_;
    return *this;
  }
  AffineInDelta& operator*=(const AffineInDelta& rhs) {
    if (!is_constant() && !rhs.is_constant()) throw DomainError("product of two Delta-dependent terms");
    if (rhs.is_constant()) {
      constant_ *= rhs.constant_;
      slope_ *= rhs.constant_;
    } else {
      Rational k = constant_;
      constant_ = k * rhs.constant_;
      slope_ = k * rhs.slope_;
    }
    return *this;
  }
  AffineInDelta& operator/=(const AffineInDelta& rhs) {
    if (!rhs.is_constant()) throw DomainError("division by a Delta-dependent term");
    if (rhs.constant_ == 0) throw DomainError("division by zero");
    constant_ /= rhs.constant_;
    slope_ /= rhs.constant_;
    return *this;
  }
  AffineInDelta operator-() const { return AffineInDelta(-constant_, -slope_); }

  friend AffineInDelta operator+(AffineInDelta a, const AffineInDelta& b) { return a += b; }
  friend AffineInDelta operator-(AffineInDelta a, const AffineInDelta& b) { return a -= b; }
  friend AffineInDelta operator*(AffineInDelta a, const AffineInDelta& b) { return a *= b; }
  friend AffineInDelta operator/(AffineInDelta a, const AffineInDelta& b) { return a /= b; }
  friend bool operator==(const AffineInDelta& a, const AffineInDelta& b) {
    return a.constant_ == b.constant_ && a.slope_ == b.slope_;
  }

  /// "20/3*D - 39".
  std::string to_string() const {
    if (slope_ == 0) return critlab::to_string(constant_);
    std::string out = (slope_ == 1 ? std::string() : slope_ == -1 ? std::string("-") : critlab::to_string(slope_) + "*") + "D";
    if (constant_ > 0) out += " + " + critlab::to_string(constant_);
    if (constant_ < 0) out += " - " + critlab::to_string(Rational(-constant_));
    return out;
  }

 private:
  Rational constant_{0};
  Rational slope_{0};
};

}  // namespace critlab
