#pragma once

#include <mpfr.h>

#include <string>
#include <variant>

#include "expasym/exactalg/poly.hpp"
#include "expasym/exactalg/rat.hpp"

namespace expasym {

/// Binary floating point with a per-value precision in bits, backed by MPFR.
/// Every operation rounds to nearest; binary operations produce a result at
/// the larger of the two operand precisions.
class BigFloat {
 public:
  static constexpr unsigned kMinPrecision = 64;
  static constexpr unsigned kDefaultPrecision = 256;

  /// Precision used when no explicit precision is passed: the innermost
  /// PrecisionScope of the calling thread, else the process-wide setting.
  static unsigned default_precision();
  /// Process-wide setting; change it before spawning worker threads.
  static void set_default_precision(unsigned bits);

  BigFloat() : BigFloat(0L) {}
  BigFloat(long value, unsigned bits = default_precision());  // NOLINT
  BigFloat(int value, unsigned bits = default_precision()) : BigFloat(static_cast<long>(value), bits) {}  // NOLINT
  explicit BigFloat(const Rat& value, unsigned bits = default_precision());
  explicit BigFloat(double value, unsigned bits = default_precision());
  /// Decimal or "p/q" string, rounded to the given precision.
  static BigFloat parse(const std::string& text, unsigned bits = default_precision());

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision() const noexcept { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Natural log of |value| as a double; usable far outside the double range.
  double log_abs() const;
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 30) const;
  /// Shortest fixed or scientific form with trailing zeros trimmed.
  std::string to_pretty_string(int digits = 30) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

 private:
  explicit BigFloat(unsigned bits, int /*uninitialized tag*/);
  void grow_to(unsigned bits);
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat const_pi(unsigned bits = BigFloat::default_precision());

/// Horner evaluation of an exact polynomial at a floating argument.
BigFloat evaluate(const Poly& p, const BigFloat& at);

/// Overrides BigFloat::default_precision() on the current thread.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// A value that is exact when the computation allowed it, an extended
/// precision approximation otherwise.
class Number {
 public:
  Number() : value_(Rat(0)) {}
  Number(Rat exact) : value_(std::move(exact)) {}         // NOLINT
  Number(BigFloat approx) : value_(std::move(approx)) {}  // NOLINT

  bool is_exact() const noexcept { return std::holds_alternative<Rat>(value_); }
  /// Throws NotExact for approximations.
  const Rat& exact() const;
  BigFloat approx(unsigned bits = BigFloat::default_precision()) const;
  bool is_zero() const;
  /// "p/q" for exact values, decimal for approximations.
  std::string to_string(int digits = 30) const;

  friend Number operator-(const Number& a, const Number& b);
  friend Number operator+(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  friend bool operator==(const Number& a, const Number& b);

 private:
  std::variant<Rat, BigFloat> value_;
};

}  // namespace expasym
