#include "expasym/operators/bigfloat.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

#include "expasym/error.hpp"

namespace expasym {

namespace {

std::atomic<unsigned> g_default_precision{BigFloat::kDefaultPrecision};
thread_local unsigned t_scoped_precision = 0;

unsigned checked(unsigned bits) {
  if (bits < BigFloat::kMinPrecision)
    throw Error(ErrorKind::InvalidArgument, "operators",
                "precision must be at least " + std::to_string(BigFloat::kMinPrecision) + " bits");
  return bits;
}

}  // namespace

unsigned BigFloat::default_precision() {
  return t_scoped_precision != 0 ? t_scoped_precision : g_default_precision.load(std::memory_order_relaxed);
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_(t_scoped_precision) { t_scoped_precision = checked(bits); }

PrecisionScope::~PrecisionScope() { t_scoped_precision = saved_; }

void BigFloat::set_default_precision(unsigned bits) { g_default_precision.store(checked(bits)); }

BigFloat::BigFloat(unsigned bits, int) { mpfr_init2(value_, static_cast<mpfr_prec_t>(checked(bits))); }

BigFloat::BigFloat(long value, unsigned bits) : BigFloat(bits, 0) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rat& value, unsigned bits) : BigFloat(bits, 0) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double value, unsigned bits) : BigFloat(bits, 0) { mpfr_set_d(value_, value, MPFR_RNDN); }

BigFloat BigFloat::parse(const std::string& text, unsigned bits) {
  if (text.find('/') != std::string::npos) return BigFloat(parse_rat(text), bits);
  BigFloat r(bits, 0);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw Error(ErrorKind::ParseError, "operators", "not a number: '" + text + "'");
  return r;
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(other.precision(), 0) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other.precision(), 0) { mpfr_swap(value_, other.value_); }

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::grow_to(unsigned bits) {
  if (bits > precision()) mpfr_prec_round(value_, static_cast<mpfr_prec_t>(bits), MPFR_RNDN);
}

double BigFloat::log_abs() const {
  if (is_zero()) return -HUGE_VAL;
  long exponent = 0;
  const double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0), value_);
  return std::string(buf.data());
}

std::string BigFloat::to_pretty_string(int digits) const {
  if (is_zero()) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", std::max(digits, 1), value_);
  return std::string(buf.data());
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r = *this;
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r = x;
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r = x;
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r = x;
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r = x;
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r = x;
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r = x;
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat r = base;
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

BigFloat const_pi(unsigned bits) {
  BigFloat r(0L, bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat evaluate(const Poly& p, const BigFloat& at) {
  BigFloat acc(0L, at.precision());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= at;
    acc += BigFloat(*it, at.precision());
  }
  return acc;
}

const Rat& Number::exact() const {
  if (!is_exact()) throw Error(ErrorKind::NotExact, "operators", "value is an approximation");
  return std::get<Rat>(value_);
}

BigFloat Number::approx(unsigned bits) const {
  if (is_exact()) return BigFloat(std::get<Rat>(value_), bits);
  return std::get<BigFloat>(value_);
}

bool Number::is_zero() const {
  return is_exact() ? std::get<Rat>(value_) == 0 : std::get<BigFloat>(value_).is_zero();
}

std::string Number::to_string(int digits) const {
  return is_exact() ? expasym::to_string(std::get<Rat>(value_)) : std::get<BigFloat>(value_).to_pretty_string(digits);
}

namespace {

unsigned working_bits(const Number& a, const Number& b) {
  unsigned bits = BigFloat::default_precision();
  if (!a.is_exact()) bits = std::max(bits, a.approx().precision());
  if (!b.is_exact()) bits = std::max(bits, b.approx().precision());
  return bits;
}

}  // namespace

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(Rat(a.exact() - b.exact()));
  const unsigned bits = working_bits(a, b);
  return Number(a.approx(bits) - b.approx(bits));
}

Number operator+(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(Rat(a.exact() + b.exact()));
  const unsigned bits = working_bits(a, b);
  return Number(a.approx(bits) + b.approx(bits));
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(Rat(a.exact() * b.exact()));
  const unsigned bits = working_bits(a, b);
  return Number(a.approx(bits) * b.approx(bits));
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  const unsigned bits = working_bits(a, b);
  return a.approx(bits) == b.approx(bits);
}

}  // namespace expasym
