#include "expasym/exactalg/laurent.hpp"

#include <algorithm>

#include "expasym/error.hpp"

namespace expasym {

std::vector<Rat> series_divide(const std::vector<Rat>& a, const std::vector<Rat>& b, int terms) {
  if (b.empty() || b.front() == 0)
    throw Error(ErrorKind::DenominatorZero, "exactalg", "series divisor has zero constant term");
  std::vector<Rat> q(static_cast<std::size_t>(std::max(terms, 0)));
  for (int k = 0; k < terms; ++k) {
    Rat acc = k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)] : Rat(0);
    const int top = std::min<int>(k, static_cast<int>(b.size()) - 1);
    for (int i = 1; i <= top; ++i) acc -= b[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(k - i)];
    q[static_cast<std::size_t>(k)] = acc / b.front();
  }
  return q;
}

LaurentSeries<Rat> laurent_at_infinity(const RatFuncN& r, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "exactalg", "expansion order must be non-negative");
  LaurentSeries<Rat> series;
  series.order = order;
  if (r.is_zero()) {
    series.min_exponent = order + 1;
    return series;
  }
  // With n = 1/u: N(1/u)/D(1/u) = u^{deg D - deg N} * rev(N)(u) / rev(D)(u).
  const Poly& num = r.numerator();
  const Poly& den = r.denominator();
  std::vector<Rat> rn(num.coefficients().rbegin(), num.coefficients().rend());
  std::vector<Rat> rd(den.coefficients().rbegin(), den.coefficients().rend());
  series.min_exponent = den.degree() - num.degree();
  const int terms = order - series.min_exponent + 1;
  if (terms > 0) series.coefficients = series_divide(rn, rd, terms);
  return series;
}

}  // namespace expasym
