#pragma once

// Seeded random generators for the property tests.

#include <random>

#include "expasym/exactalg/moment_poly.hpp"
#include "expasym/exactalg/poly.hpp"
#include "expasym/exactalg/ratfunc.hpp"

namespace expasym::testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat rat(long span = 9, long max_den = 7) { return make_rat(integer(-span, span), integer(1, max_den)); }

  Rat nonzero_rat(long span = 9, long max_den = 7) {
    Rat r;
    do r = rat(span, max_den);
    while (r == 0);
    return r;
  }

  Poly poly(int max_degree = 4) {
    std::vector<Rat> c;
    const int degree = static_cast<int>(integer(-1, max_degree));
    for (int i = 0; i <= degree; ++i) c.push_back(rat());
    return Poly(std::move(c));
  }

  Poly nonzero_poly(int max_degree = 4) {
    Poly p;
    do p = poly(max_degree);
    while (p.is_zero());
    return p;
  }

  // Denominators without positive integer roots near the sampled n, so
  // evaluation at n >= 1 is safe: products of (n + a) with a >= 0.
  Poly safe_denominator(int max_factors = 2) {
    Poly d = Poly::constant(nonzero_rat());
    const int k = static_cast<int>(integer(0, max_factors));
    for (int i = 0; i < k; ++i) d *= Poly{make_rat(integer(0, 5)), Rat(1)};
    return d;
  }

  RatFuncN ratfunc() { return RatFuncN(poly(3), safe_denominator()); }

  MomentPoly moment_poly(int max_x_degree = 3) {
    MomentPoly m;
    const int degree = static_cast<int>(integer(-1, max_x_degree));
    for (int k = 0; k <= degree; ++k) m += MomentPoly::term(ratfunc(), k);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace expasym::testgen
