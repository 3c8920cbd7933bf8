#pragma once

#include <map>
#include <string>

#include "expasym/exactalg/laurent.hpp"
#include "expasym/exactalg/poly.hpp"
#include "expasym/exactalg/ratfunc.hpp"

namespace expasym {

/// Polynomial in x whose coefficients are rational functions of n; the
/// ring that holds the central moments mu_{n,s}(x).
class MomentPoly {
 public:
  MomentPoly() = default;
  MomentPoly(const Rat& c);  // NOLINT
  MomentPoly(const RatFuncN& c);  // NOLINT
  /// Poly in x with constant-in-n coefficients.
  static MomentPoly from_x(const Poly& p);
  /// c(n) * x^k
  static MomentPoly term(const RatFuncN& c, int k);

  const std::map<int, RatFuncN>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int x_degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  RatFuncN coefficient(int k) const;

  /// Partial derivative in x.
  MomentPoly dx() const;
  MomentPoly dx(int order) const;

  /// Throws DenominatorZero when n is a pole of some coefficient.
  Rat operator()(const Rat& n, const Rat& x) const;
  /// Substitute n; returns the resulting polynomial in x.
  Poly at_n(const Rat& n) const;

  /// Coefficients g_j(x) of n^{-j} for j <= order, keyed by j; zero
  /// coefficients are omitted.
  std::map<int, Poly> expand(int order) const;

  MomentPoly& operator+=(const MomentPoly& o);
  MomentPoly& operator-=(const MomentPoly& o);
  MomentPoly& operator*=(const MomentPoly& o);
  MomentPoly& operator*=(const RatFuncN& c);
  friend MomentPoly operator+(MomentPoly a, const MomentPoly& b) { return a += b; }
  friend MomentPoly operator-(MomentPoly a, const MomentPoly& b) { return a -= b; }
  friend MomentPoly operator*(MomentPoly a, const MomentPoly& b) { return a *= b; }
  friend MomentPoly operator*(MomentPoly a, const RatFuncN& c) { return a *= c; }
  friend MomentPoly operator*(const RatFuncN& c, MomentPoly a) { return a *= c; }
  MomentPoly operator-() const;

  friend bool operator==(const MomentPoly& a, const MomentPoly& b) { return a.terms_ == b.terms_; }

  /// Sum of "(c(n))*x^k" terms in ascending powers of x, "0" when empty.
  std::string to_string() const;

 private:
  void add_term(int k, const RatFuncN& c);
  std::map<int, RatFuncN> terms_;
};

}  // namespace expasym
