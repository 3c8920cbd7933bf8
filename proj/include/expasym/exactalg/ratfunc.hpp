#pragma once

#include <string>

#include "expasym/exactalg/poly.hpp"

namespace expasym {

/// Rational function of the operator index n. Stored reduced with a monic
/// denominator, so two equal functions have identical representations.
class RatFuncN {
 public:
  RatFuncN() : num_(), den_(Poly::constant(1)) {}
  RatFuncN(const Rat& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
  explicit RatFuncN(Poly numerator) : num_(std::move(numerator)), den_(Poly::constant(1)) {}
  RatFuncN(Poly numerator, Poly denominator);

  /// The index itself, n.
  static RatFuncN n();
  /// n^(-k)
  static RatFuncN inverse_power(int k);

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  /// Throws DenominatorZero at a pole.
  Rat operator()(const Rat& n) const;

  RatFuncN& operator+=(const RatFuncN& o);
  RatFuncN& operator-=(const RatFuncN& o);
  RatFuncN& operator*=(const RatFuncN& o);
  RatFuncN& operator/=(const RatFuncN& o);
  friend RatFuncN operator+(RatFuncN a, const RatFuncN& b) { return a += b; }
  friend RatFuncN operator-(RatFuncN a, const RatFuncN& b) { return a -= b; }
  friend RatFuncN operator*(RatFuncN a, const RatFuncN& b) { return a *= b; }
  friend RatFuncN operator/(RatFuncN a, const RatFuncN& b) { return a /= b; }
  RatFuncN operator-() const;

  friend bool operator==(const RatFuncN& a, const RatFuncN& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "p(n)" when the denominator is 1, "(p(n))/(q(n))" otherwise; monomial
  /// parts print without parentheses, e.g. "1/n^2".
  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace expasym
