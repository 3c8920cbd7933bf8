#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expasym/exactalg/rat.hpp"

namespace expasym {

/// Dense univariate polynomial over Rat, coefficients indexed by power.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coefficients);
  Poly(std::initializer_list<Rat> coefficients);
  /// Constant polynomial.
  static Poly constant(const Rat& c);
  /// c * var^k
  static Poly monomial(const Rat& c, int k);
  /// The identity polynomial, var.
  static Poly identity();

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of var^k; zero outside the stored range.
  Rat coefficient(int k) const;
  const Rat& leading() const { return coeffs_.back(); }

  Rat operator()(const Rat& at) const;

  Poly derivative() const;
  Poly derivative(int order) const;
  Poly pow(unsigned exponent) const;
  Poly monic() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical text: ascending powers, e.g. "1 - 2*x + x^2/3".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Euclidean division; throws DenominatorZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace expasym
