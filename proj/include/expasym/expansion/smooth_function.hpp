#pragma once

#include <climits>
#include <string>
#include <string_view>

#include "expasym/exactalg/poly.hpp"
#include "expasym/operators/bigfloat.hpp"
#include "expasym/operators/family.hpp"

namespace expasym {

/// f(t) = p(t) * base(t) with base one of 1, exp(a t), sin(a t + b). All
/// derivatives exist in closed form; a plain polynomial has base 1.
class SmoothFunction {
 public:
  enum class Base { one, exponential, sinusoid };
  static constexpr int kUnlimited = INT_MAX;

  static SmoothFunction polynomial(Poly p);
  static SmoothFunction exponential(Rat a);
  static SmoothFunction sinusoid(Rat a, Rat b);
  /// t^k
  static SmoothFunction monomial(int k);

  /// "poly:c0,c1,..." (ascending rational coefficients), "exp:a", "sin:a,b".
  static SmoothFunction parse(std::string_view spec);

  Base base() const noexcept { return base_; }
  const Poly& factor() const noexcept { return factor_; }
  const Rat& rate() const noexcept { return a_; }
  const Rat& phase() const noexcept { return b_; }
  bool is_polynomial() const noexcept { return base_ == Base::one; }

  /// Highest derivative order callers may request; unlimited by default.
  int derivative_cap() const noexcept { return cap_; }
  SmoothFunction with_derivative_cap(int cap) const;
  /// Throws DerivativeCapExceeded when order > derivative_cap().
  void require_derivatives(int order) const;

  /// t -> q(t) f(t)
  SmoothFunction times(const Poly& q) const;

  /// k-th derivative at t; exact variants throw NotExact for non-polynomials.
  Rat derivative_exact(int k, const Rat& t) const;
  BigFloat derivative(int k, const BigFloat& t) const;
  /// Exact when f is a polynomial.
  Number derivative_at(int k, const Rat& t) const;
  /// k-th derivative as a polynomial; polynomial f only.
  Poly derivative_poly(int k) const;

  Rat value_exact(const Rat& t) const { return derivative_exact(0, t); }
  BigFloat value(const BigFloat& t) const { return derivative(0, t); }

  /// Whether f satisfies the growth condition of the interval: polynomially
  /// bounded towards every infinite end.
  bool admissible_on(const Interval& interval) const;

  /// C and d with |f(u)| <= C (1 + u)^d for all u >= 0. Only meaningful when
  /// admissible on [0, inf).
  struct Majorant {
    double scale;
    int degree;
  };
  Majorant majorant_nonnegative() const;

  /// Human readable form, e.g. "exp(1*t)", "sin(1*t + 0)", "1 - 2*t^2".
  std::string describe() const;
  /// The parse() form for plain variants.
  std::string spec() const;

 private:
  SmoothFunction(Poly factor, Base base, Rat a, Rat b, int cap)
      : factor_(std::move(factor)), base_(base), a_(std::move(a)), b_(std::move(b)), cap_(cap) {}
  BigFloat base_derivative(int k, const BigFloat& t) const;

  Poly factor_;
  Base base_;
  Rat a_;
  Rat b_;
  int cap_;
};

}  // namespace expasym
