#include "critlab/surd.hpp"

#include <stdexcept>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

bool perfect_cube(const BigInt& z, BigInt& root) {
  BigInt magnitude = abs(z);
  const bool exact = mpz_root(root.get_mpz_t(), magnitude.get_mpz_t(), 3) != 0;
  if (z < 0) root = -root;
  return exact;
}

constexpr mpfr_prec_t kSignPrecisionCap = 1 << 16;

}  // namespace

Omega::Omega(Rational cube, bool rational, Rational value)
    : cube_(std::move(cube)), rational_(rational), value_(std::move(value)) {}

Omega Omega::rational(const Rational& value) {
  if (value <= 0) throw DomainError("omega must be positive");
  return Omega(pow(value, 3), true, value);
}

Omega Omega::cube_root(const Rational& radicand) {
  if (radicand <= 0) throw DomainError("omega radicand must be positive");
  BigInt num_root, den_root;
  if (perfect_cube(radicand.get_num(), num_root) && perfect_cube(radicand.get_den(), den_root)) {
    return Omega(radicand, true, ratio(num_root, den_root));
  }
  return Omega(radicand, false, Rational(0));
}

const Rational& Omega::value() const {
  if (!rational_) throw DomainError("omega is irrational");
  return value_;
}

Interval Omega::enclose() const {
  if (rational_) return Interval(value_);
  return cbrt(Interval(cube_));
}

std::string Omega::describe() const {
  if (rational_) return critlab::to_string(value_);
  return "cbrt(" + critlab::to_string(cube_) + ")";
}

// ---------------------------------------------------------------------------

Surd::Surd(OmegaPtr field, Rational a, Rational b, Rational c)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (!field_ && (b_ != 0 || c_ != 0)) throw DomainError("Surd with omega terms needs a field");
  fold();
}

Surd Surd::omega(const OmegaPtr& field) { return Surd(field, 0, 1, 0); }

void Surd::fold() {
  if (field_ && field_->is_rational()) {
    const Rational& w = field_->value();
    a_ += b_ * w + c_ * w * w;
    b_ = 0;
    c_ = 0;
  }
}

void Surd::adopt(const OmegaPtr& other) {
  if (!other) return;
  if (!field_) {
    field_ = other;
    return;
  }
  if (field_ != other && !(*field_ == *other)) {
    throw DomainError("Surd arithmetic across different omega fields");
  }
}

const Rational& Surd::rational() const {
  if (!is_rational()) throw DomainError("Surd value is irrational: " + to_string());
  return a_;
}

Surd& Surd::operator+=(const Surd& rhs) {
  adopt(rhs.field_);
  a_ += rhs.a_;
  b_ += rhs.b_;
  c_ += rhs.c_;
  return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
  adopt(rhs.field_);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  c_ -= rhs.c_;
  return *this;
}

Surd& Surd::operator*=(const Surd& rhs) {
  adopt(rhs.field_);
  if (is_rational() && rhs.is_rational()) {
    a_ *= rhs.a_;
    return *this;
  }
  const Rational& r = field_->cube();
  Rational a = a_ * rhs.a_ + r * (b_ * rhs.c_ + c_ * rhs.b_);
  Rational b = a_ * rhs.b_ + b_ * rhs.a_ + r * c_ * rhs.c_;
  Rational c = a_ * rhs.c_ + b_ * rhs.b_ + c_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  return *this;
}

Surd Surd::inverse() const {
  if (is_rational()) {
    if (a_ == 0) throw DomainError("division by zero");
    return Surd(field_, 1 / a_, 0, 0);
  }
  const Rational& r = field_->cube();
  Rational big_a = a_ * a_ - r * b_ * c_;
  Rational big_b = r * c_ * c_ - a_ * b_;
  Rational big_c = b_ * b_ - a_ * c_;
  Rational norm = a_ * a_ * a_ + r * b_ * b_ * b_ + r * r * c_ * c_ * c_ - 3 * r * a_ * b_ * c_;
  if (norm == 0) throw DomainError("division by zero");
  return Surd(field_, big_a / norm, big_b / norm, big_c / norm);
}

Surd& Surd::operator/=(const Surd& rhs) {
  adopt(rhs.field_);
  if (rhs.is_rational()) {
    if (rhs.a_ == 0) throw DomainError("division by zero");
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    c_ /= rhs.a_;
    return *this;
  }
  return *this *= rhs.inverse();
}

Surd Surd::operator-() const { return Surd(field_, -a_, -b_, -c_); }

bool operator==(const Surd& x, const Surd& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
}

Interval Surd::enclose() const {
  if (is_rational()) return Interval(a_);
  Interval w = field_->enclose();
  return Interval(a_) + Interval(b_) * w + Interval(c_) * w * w;
}

int Surd::sign() const {
  if (is_rational()) return sgn(a_);
  for (mpfr_prec_t bits = 64; bits <= kSignPrecisionCap; bits *= 2) {
    PrecisionScope scope(bits);
    const int s = enclose().certain_sign();
    if (s != 0) return s;
  }
  throw std::runtime_error("sign of " + to_string() + " not resolved within precision cap");
}

BigInt Surd::floor() const {
  if (is_rational()) return critlab::floor(a_);
  Interval approx_value = [&] {
    PrecisionScope scope(128);
    return enclose();
  }();
  BigInt m = critlab::floor(approx_value.lo_rational());
  while ((Surd(BigInt(m + 1)) - *this).sign() <= 0) ++m;
  while ((Surd(m) - *this).sign() > 0) --m;
  return m;
}

BigInt Surd::ceil() const {
  if (is_rational()) return critlab::ceil(a_);
  return -(-*this).floor();
}

double Surd::approx() const {
  PrecisionScope scope(128);
  Interval e = enclose();
  return 0.5 * (e.lo_double() + e.hi_double());
}

std::string Surd::to_string() const {
  if (is_rational()) return critlab::to_string(a_);
  std::string out;
  auto term = [&](const Rational& coeff, const char* basis) {
    if (coeff == 0) return;
    if (!out.empty()) out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0) out += "-";
    Rational mag = abs(coeff);
    if (basis[0] == '\0') {
      out += critlab::to_string(mag);
    } else {
      if (mag != 1) out += critlab::to_string(mag) + "*";
      out += basis;
    }
  };
  term(a_, "");
  term(b_, "w");
  term(c_, "w^2");
  return out + " [w=" + field_->describe() + "]";
}

}  // namespace critlab
