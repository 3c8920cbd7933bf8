#pragma once

#include <map>
#include <vector>

#include "expasym/exactalg/moment_poly.hpp"
#include "expasym/expansion/smooth_function.hpp"
#include "expasym/operators/bigfloat.hpp"
#include "expasym/operators/family.hpp"

namespace expasym {

/// One Leibniz summand of (mu_{n,s'} f^{(s')} / s'!)^{(r)}:
///   coefficient = C(r, i) (d/dx)^i (mu_{n,s'} / s'!)
/// multiplying f^{(s' + r - i)}(x).
struct ExpansionTerm {
  int f_order;           // derivative order of f hit by the term
  int source_order;      // s'
  int leibniz_index;     // i
  MomentPoly coefficient;
};

/// a_k(f, x) = sum_s terms[s](x) f^{(s)}(x), the coefficient of n^{-k}.
struct ExpansionCoefficient {
  int k;
  std::map<int, Poly> terms;
};

/// sum_{s=0}^{2q} mu_{n,s}(x) f^{(s)}(x) / s!; exact for polynomial f.
Number truncated_sum(const OperatorFamily& family, const SmoothFunction& f, const Rat& x, const Rat& n, int q);

/// a_0..a_q regrouped by powers of 1/n. Requires lambda_n = n
/// (NotPureExponentialIndex otherwise).
std::vector<ExpansionCoefficient> complete_coeffs(const OperatorFamily& family, int q);

/// (d/dx)^r a_k(f, x), by Leibniz over the polynomial weights.
Number evaluate_coefficient(const ExpansionCoefficient& a, const SmoothFunction& f, const Rat& x, int r = 0);

/// sum_k a_k(f, x) n^{-k}
Number evaluate_complete(const std::vector<ExpansionCoefficient>& coeffs, const SmoothFunction& f, const Rat& x,
                         const Rat& n);

/// Terms of sum_{s=0}^{2q} (mu_{n,s}(x) f^{(s)}(x) / s!)^{(r)} with nonzero
/// coefficients, ordered by (source_order, leibniz_index).
std::vector<ExpansionTerm> derivative_terms(const OperatorFamily& family, int q, int r);

/// Value of the derivative_terms sum; exact for polynomial f.
Number evaluate_derivative_expansion(const OperatorFamily& family, const SmoothFunction& f, const Rat& x,
                                     const Rat& n, int q, int r);

/// lim n ((S_n f)^{(r)}(x) - f^{(r)}(x)) = (phi f'' / 2)^{(r)}(x) for
/// exponential-type families.
Number voronovskaja_limit(const OperatorFamily& family, const SmoothFunction& f, const Rat& x, int r);

/// (psi_x^m f)^{(s)}(x) = C(s, m) m! f^{(s-m)}(x); returns C(s, m) m!.
Rat psi_power_derivative(int m, int s);

}  // namespace expasym
