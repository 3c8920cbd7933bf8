#pragma once

#include "expasym/expansion/smooth_function.hpp"
#include "expasym/operators/bigfloat.hpp"
#include "expasym/operators/family.hpp"

namespace expasym {

struct EvalOptions {
  /// Absolute truncation tolerance for the infinite series and for the
  /// quadrature doubling test.
  BigFloat tol = BigFloat::parse("1e-30");
  /// Gauss-Hermite nodes for Gauss-Weierstrass.
  int quad_order = 32;
};

/// Delta_h^r f(t0) = sum_i (-1)^{r-i} C(r,i) f(t0 + i h); exact for polynomial f.
Number forward_difference(const SmoothFunction& f, const Rat& t0, const Rat& h, int r);
BigFloat forward_difference(const SmoothFunction& f, const BigFloat& t0, const BigFloat& h, int r);

/// (B_n f)^{(r)}(x) = n!/(n-r)! sum_{k=0}^{n-r} Delta_{1/n}^r f(k/n) b_{n-r,k}(x);
/// exact for polynomial f.
Number bernstein_eval(const SmoothFunction& f, int n, const Rat& x, int r = 0);

/// (S_n f)^{(r)}(x) = n^r e^{-nx} sum_k (nx)^k / k! Delta_{1/n}^r f(k/n),
/// truncated with a rigorous tail bound below tol.
BigFloat szasz_eval(const SmoothFunction& f, int n, const Rat& x, int r, const BigFloat& tol);

/// (V_n f)^{(r)}(x) = n(n+1)...(n+r-1) sum_k Delta_{1/n}^r f(k/n) v_{n+r,k}(x)
/// with v_{m,k}(x) = C(m+k-1,k) x^k (1+x)^{-m-k}.
BigFloat baskakov_eval(const SmoothFunction& f, int n, const Rat& x, int r, const BigFloat& tol);

/// (W_n f)^{(r)}(x) by Gauss-Hermite quadrature of the r-times differentiated
/// heat kernel; throws QuadratureNotConverged when doubling the order moves
/// the result by more than tol.
BigFloat gauss_weierstrass_eval(const SmoothFunction& f, int n, const Rat& x, int r, int quad_order,
                                const BigFloat& tol);

/// Dispatch on the family's evaluator after validating n, x, r and the
/// growth condition.
Number evaluate_operator(const OperatorFamily& family, const SmoothFunction& f, int n, const Rat& x, int r,
                         const EvalOptions& options = {});

/// mu_{n,s}(x) = (S_n psi_x^s)(x) by direct evaluation; exact for Bernstein.
Number central_moment_direct(const OperatorFamily& family, int n, const Rat& x, int s,
                             const EvalOptions& options = {});

/// (t - x)^s as a polynomial in t.
Poly psi_power(const Rat& x, int s);

}  // namespace expasym
