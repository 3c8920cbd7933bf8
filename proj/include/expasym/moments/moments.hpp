#pragma once

#include <map>
#include <string>
#include <vector>

#include "expasym/exactalg/moment_poly.hpp"
#include "expasym/exactalg/poly.hpp"
#include "expasym/operators/family.hpp"

namespace expasym {

/// Central moments mu_{n,s}(x) = (S_n psi_x^s)(x) for s = 0..s_max.
struct MomentTable {
  std::string family_id;
  std::vector<MomentPoly> moments;

  int s_max() const { return static_cast<int>(moments.size()) - 1; }
  const MomentPoly& operator[](int s) const { return moments.at(static_cast<std::size_t>(s)); }
};

/// Runs
///   mu_{n,s+1} = mu_{n,1} mu_{n,s} + (phi / lambda_n) (s mu_{n,s-1} + mu'_{n,s})
/// from mu_{n,0} = 1 and the seed mu_{n,1}. No validation of the inputs, so
/// it also serves symbolic experiments with arbitrary phi.
std::vector<MomentPoly> moment_recursion(const Poly& phi, const RatFuncN& lambda, const MomentPoly& mu1, int s_max);

/// Memoized per family; safe to call from several threads.
MomentTable central_moments(const OperatorFamily& family, int s_max);

/// g_{s,j}(x) with mu_{n,s}(x) = sum_j g_{s,j}(x) n^{-j}, for j <= order.
std::map<int, Poly> moment_expansion(const MomentPoly& mu, int order);

/// Dominant coefficient of the moment of the given order:
///   order 2s:   (2s)! / (2^s s!) phi^s
///   order 2s+1: s (2s+1)! / (3 2^s s!) phi^s phi'
/// It multiplies n^{-floor((order+1)/2)}.
Poly leading_term_closed_form(int order, const Poly& phi);

/// Smallest j with a nonzero n^{-j} coefficient. Throws ZeroMoment for the
/// zero moment, whose order callers treat as infinite.
int vanishing_order(const MomentPoly& mu);

/// (S_n e_r)(x) = sum_m C(r,m) x^{r-m} mu_{n,m}(x). Throws OrderTooLarge when
/// the table is too short.
MomentPoly raw_moment(const MomentTable& table, int r);

}  // namespace expasym
