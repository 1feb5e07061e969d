#include "critlab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

thread_local mpfr_prec_t t_precision = 64;

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer_part(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("not a number: '" + std::string(whole) + "'", 0);
  }
  BigInt z(std::string(s), 10);
  return negative ? BigInt(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError("not a number: '" + std::string(whole) + "'", 0);
  }
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError("not a number: '" + std::string(whole) + "'", 0);
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  Rational value(BigInt(digits.empty() ? std::string("0") : digits, 10),
                 pow(BigInt(10), static_cast<unsigned>(frac_part.size())));
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number", 0);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer_part(s.substr(0, slash), text);
    BigInt den = parse_integer_part(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (const auto caret = s.find('^'); caret != std::string_view::npos) {
    Rational base = parse_decimal(s.substr(0, caret), text);
    BigInt e = parse_integer_part(s.substr(caret + 1), text);
    if (e < 0 || e > 100000) throw ParseError("exponent out of range in '" + std::string(text) + "'", caret + 1);
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Rational mantissa = parse_decimal(s.substr(0, e), text);
    BigInt exponent = parse_integer_part(s.substr(e + 1), text);
    if (abs(exponent) > 100000) throw ParseError("exponent out of range in '" + std::string(text) + "'", e + 1);
    const long ex = exponent.get_si();
    Rational scale = pow(Rational(10), static_cast<unsigned>(ex < 0 ? -ex : ex));
    return ex < 0 ? Rational(mantissa / scale) : Rational(mantissa * scale);
  }
  return parse_decimal(s, text);
}

BigInt parse_bigint(std::string_view text) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1) throw ParseError("expected an integer: '" + std::string(text) + "'", 0);
  return q.get_num();
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

mpfr_prec_t working_precision() { return t_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(t_precision) {
  if (bits < MPFR_PREC_MIN || bits > (1 << 20)) throw std::invalid_argument("precision out of range");
  t_precision = bits;
}

PrecisionScope::~PrecisionScope() { t_precision = saved_; }

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(Uninit) {
  mpfr_init2(lo_, t_precision);
  mpfr_init2(hi_, t_precision);
}

Interval::Interval() : Interval(Uninit{}) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value) : Interval(Uninit{}) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Rational& value) : Interval(Uninit{}) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const BigInt& value) : Interval(Uninit{}) {
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi) : Interval(Uninit{}) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

bool Interval::contains(const Rational& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

int Interval::certain_sign() const {
  if (positive()) return 1;
  if (negative()) return -1;
  return 0;
}

double Interval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, mpfr_get_prec(hi_));
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

namespace {

std::string format(const mpfr_t value, int digits, bool up) {
  char* buffer = nullptr;
  if (up) {
    mpfr_asprintf(&buffer, "%.*RUe", digits, value);
  } else {
    mpfr_asprintf(&buffer, "%.*RDe", digits, value);
  }
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

Rational to_rational(const mpfr_t value) {
  if (!mpfr_number_p(value)) throw DomainError("interval endpoint is not finite");
  BigInt mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value);
  Rational r(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

}  // namespace

std::string Interval::lo_string(int digits) const { return format(lo_, digits, false); }
std::string Interval::hi_string(int digits) const { return format(hi_, digits, true); }
Rational Interval::lo_rational() const { return to_rational(lo_); }
Rational Interval::hi_rational() const { return to_rational(hi_); }

Interval& Interval::operator+=(const Interval& rhs) {
  Interval r(Uninit{});
  mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this = std::move(r);
}

Interval& Interval::operator-=(const Interval& rhs) {
  Interval r(Uninit{});
  mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
  return *this = std::move(r);
}

Interval& Interval::operator*=(const Interval& rhs) {
  Interval r(Uninit{});
  mpfr_t t;
  mpfr_init2(t, t_precision);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return *this = std::move(r);
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0) {
    throw DomainError("interval division by an enclosure of zero");
  }
  Interval r(Uninit{});
  mpfr_t t;
  mpfr_init2(t, t_precision);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return *this = std::move(r);
}

Interval Interval::operator-() const {
  Interval r(Uninit{});
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi_) < 0) throw DomainError("sqrt of a negative interval");
  Interval r(Interval::Uninit{});
  if (mpfr_sgn(x.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval cbrt(const Interval& x) {
  Interval r(Interval::Uninit{});
  mpfr_cbrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_cbrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("log of a non-positive interval");
  Interval r(Interval::Uninit{});
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(Interval::Uninit{});
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninit{});
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninit{});
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninit{});
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

}  // namespace critlab
