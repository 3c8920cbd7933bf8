#pragma once

#include <map>
#include <vector>

#include "expasym/exactalg/poly.hpp"
#include "expasym/exactalg/ratfunc.hpp"

namespace expasym {

/// Truncated expansion sum_{j=min_exponent}^{order} c_j n^{-j} at n = infinity.
/// Negative exponents carry the polynomial part (positive powers of n).
template <class Coeff>
struct LaurentSeries {
  int min_exponent = 0;
  std::vector<Coeff> coefficients;  // coefficients[i] belongs to n^{-(min_exponent + i)}
  int order = 0;

  bool is_zero() const {
    for (const auto& c : coefficients)
      if (!(c == Coeff{})) return false;
    return true;
  }

  Coeff coefficient(int j) const {
    if (j < min_exponent || j > min_exponent + static_cast<int>(coefficients.size()) - 1) return Coeff{};
    return coefficients[static_cast<std::size_t>(j - min_exponent)];
  }

  /// Sparse view without the zero coefficients.
  std::map<int, Coeff> terms() const {
    std::map<int, Coeff> out;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      if (!(coefficients[i] == Coeff{})) out.emplace(min_exponent + static_cast<int>(i), coefficients[i]);
    return out;
  }
};

/// Exact coefficients of n^{-j}, j <= order, of r expanded at n = infinity.
/// The remainder is O(n^{-order-1}). For the zero function the series is
/// empty with min_exponent = order + 1.
LaurentSeries<Rat> laurent_at_infinity(const RatFuncN& r, int order);

/// Exact truncated power series quotient a(u)/b(u) with b(0) != 0, terms
/// u^0..u^terms-1.
std::vector<Rat> series_divide(const std::vector<Rat>& a, const std::vector<Rat>& b, int terms);

}  // namespace expasym
