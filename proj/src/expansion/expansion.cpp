#include "expasym/expansion/expansion.hpp"

#include "expasym/error.hpp"
#include "expasym/moments/moments.hpp"

namespace expasym {

namespace {

Rat inverse_factorial(int s) { return Rat(BigInt(1), factorial(static_cast<unsigned long>(s))); }

Rat choose(int n, int k) { return Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))); }

void require_unit_index(const OperatorFamily& family) {
  if (!family.has_unit_index())
    throw Error(ErrorKind::NotPureExponentialIndex, "expansion",
                family.name() + ": regrouping by powers of 1/n needs lambda_n = n, got " +
                    family.lambda().to_string());
}

void require_order(int q, int minimum, const char* what) {
  if (q < minimum)
    throw Error(ErrorKind::InvalidArgument, "expansion",
                std::string(what) + " must be at least " + std::to_string(minimum));
}

}  // namespace

Number truncated_sum(const OperatorFamily& family, const SmoothFunction& f, const Rat& x, const Rat& n, int q) {
  require_order(q, 0, "q");
  f.require_derivatives(2 * q);
  const MomentTable table = central_moments(family, 2 * q);
  Number acc(Rat(0));
  for (int s = 0; s <= 2 * q; ++s) {
    const Rat weight = table[s](n, x) * inverse_factorial(s);
    if (weight == 0) continue;
    acc = acc + Number(weight) * f.derivative_at(s, x);
  }
  return acc;
}

std::vector<ExpansionCoefficient> complete_coeffs(const OperatorFamily& family, int q) {
  require_unit_index(family);
  require_order(q, 0, "q");
  const MomentTable table = central_moments(family, 2 * q);
  std::vector<ExpansionCoefficient> out;
  for (int k = 0; k <= q; ++k) out.push_back({k, {}});
  for (int s = 0; s <= 2 * q; ++s) {
    for (const auto& [j, g] : moment_expansion(table[s], q)) {
      if (j < 0) continue;  // no positive powers of n occur for valid families
      Poly term = g * inverse_factorial(s);
      auto& slot = out[static_cast<std::size_t>(j)].terms[s];
      slot += term;
      if (slot.is_zero()) out[static_cast<std::size_t>(j)].terms.erase(s);
    }
  }
  return out;
}

Number evaluate_coefficient(const ExpansionCoefficient& a, const SmoothFunction& f, const Rat& x, int r) {
  require_order(r, 0, "r");
  Number acc(Rat(0));
  for (const auto& [s, weight] : a.terms) {
    for (int i = 0; i <= r; ++i) {
      const Rat w = choose(r, i) * weight.derivative(i)(x);
      if (w == 0) continue;
      acc = acc + Number(w) * f.derivative_at(s + r - i, x);
    }
  }
  return acc;
}

Number evaluate_complete(const std::vector<ExpansionCoefficient>& coeffs, const SmoothFunction& f, const Rat& x,
                         const Rat& n) {
  Number acc(Rat(0));
  Rat scale = 1;
  for (const auto& a : coeffs) {
    scale = Rat(1) / pow(n, static_cast<unsigned long>(a.k));
    acc = acc + Number(scale) * evaluate_coefficient(a, f, x);
  }
  return acc;
}

std::vector<ExpansionTerm> derivative_terms(const OperatorFamily& family, int q, int r) {
  require_order(q, 1, "q");
  require_order(r, 0, "r");
  const MomentTable table = central_moments(family, 2 * q);
  std::vector<ExpansionTerm> out;
  for (int s = 0; s <= 2 * q; ++s) {
    MomentPoly scaled = table[s] * RatFuncN(inverse_factorial(s));
    for (int i = 0; i <= r && !scaled.is_zero(); ++i) {
      out.push_back({s + r - i, s, i, scaled * RatFuncN(choose(r, i))});
      scaled = scaled.dx();
    }
  }
  return out;
}

Number evaluate_derivative_expansion(const OperatorFamily& family, const SmoothFunction& f, const Rat& x,
                                     const Rat& n, int q, int r) {
  require_order(q, 1, "q");
  require_order(r, 0, "r");
  f.require_derivatives(2 * q + r);
  // Collect the exact weight of every f-derivative first so that each
  // derivative of f is evaluated once.
  std::map<int, Rat> weights;
  for (const auto& term : derivative_terms(family, q, r)) weights[term.f_order] += term.coefficient(n, x);
  Number acc(Rat(0));
  for (const auto& [order, w] : weights) {
    if (w == 0) continue;
    acc = acc + Number(w) * f.derivative_at(order, x);
  }
  return acc;
}

Number voronovskaja_limit(const OperatorFamily& family, const SmoothFunction& f, const Rat& x, int r) {
  require_unit_index(family);
  if (!family.mu1().is_zero())
    throw Error(ErrorKind::NotPureExponentialIndex, "expansion", family.name() + " is not of exponential type");
  require_order(r, 0, "r");
  f.require_derivatives(r + 2);
  Number acc(Rat(0));
  for (int i = 0; i <= r; ++i) {
    const Rat w = choose(r, i) * family.phi().derivative(i)(x) / 2;
    if (w == 0) continue;
    acc = acc + Number(w) * f.derivative_at(2 + r - i, x);
  }
  return acc;
}

Rat psi_power_derivative(int m, int s) {
  if (m < 0 || s < 0) throw Error(ErrorKind::InvalidArgument, "expansion", "orders must be non-negative");
  if (m > s) return 0;
  return Rat(falling_factorial(static_cast<unsigned long>(s), static_cast<unsigned long>(m)));
}

}  // namespace expasym
