#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expasym/expansion/smooth_function.hpp"
#include "expasym/operators/bigfloat.hpp"
#include "expasym/operators/evaluators.hpp"
#include "expasym/operators/family.hpp"

namespace expasym {

/// Dyadic grid n0, 2 n0, ..., n0 2^{levels-1}.
std::vector<long> dyadic_grid(long n0, int levels);

struct StudyOptions {
  unsigned precision_bits = BigFloat::kDefaultPrecision;
  EvalOptions eval;
  /// Evaluate grid points on worker threads. Results do not depend on it.
  bool parallel = true;
};

/// Outcome of a convergence study on a dyadic n-grid.
struct ConvergenceReport {
  std::string kind;  // "residual" or "voronovskaja"
  std::string family_id;
  std::string f_description;
  std::string f_spec;
  Rat x;
  int r = 0;
  int q = 0;
  std::vector<long> grid;
  std::vector<Number> values;
  std::vector<Number> predictions;
  std::vector<Number> residuals;
  /// Residuals treated as zero: exactly zero, or below the numeric floor
  /// for approximate values. They are excluded from the fit.
  int zero_residuals = 0;
  bool all_zero = false;
  std::optional<double> fitted_order;
  std::optional<double> r_squared;
  std::vector<double> ratio_track;  // |d_{2n} / d_n|
  bool pass = false;
  std::string note;
  unsigned precision_bits = 0;
  std::string tol;
};

/// R_n = (S_n f)^{(r)}(x) - sum_{s=0}^{2q} (mu_{n,s} f^{(s)} / s!)^{(r)}(x).
/// Passes when the fitted order is <= -(q + 0.75) or every residual is zero.
ConvergenceReport residual_study(const OperatorFamily& family, const SmoothFunction& f, const Rat& x, int r, int q,
                                 const std::vector<long>& grid, const StudyOptions& options = {});

/// d_n = n ((S_n f)^{(r)}(x) - f^{(r)}(x)) - (phi f''/2)^{(r)}(x). values hold
/// the scaled sequence, predictions the limit. Passes when |d_n| decreases and
/// the ratios |d_{2n}/d_n| on the upper half of the grid lie in [0.35, 0.65].
ConvergenceReport voronovskaja_study(const OperatorFamily& family, const SmoothFunction& f, const Rat& x, int r,
                                     const std::vector<long>& grid, const StudyOptions& options = {});

/// Each level eliminates one n^{-p} term:
///   T^{(m+1)}_j = (2^p T^{(m)}_{j+1} - T^{(m)}_j) / (2^p - 1).
/// Returns every level, the input first. Throws GridNotDyadic.
std::vector<std::vector<Number>> richardson(const std::vector<long>& grid, const std::vector<Number>& values,
                                            const std::vector<int>& orders);

/// (S_n f)'(x) - lambda_n/phi(x) ((S_n(psi_x f))(x) - (S_n psi_x)(x) (S_n f)(x)),
/// accurate to options.tol. Exact for Bernstein with polynomial f.
Number ode_identity_check(const OperatorFamily& family, const SmoothFunction& f, int n, const Rat& x,
                          const EvalOptions& options = {});

/// (S_n(psi_x^m f))'(x) - [lambda_n/phi(x) ((S_n(psi_x^{m+1} f))(x) - (S_n psi_x)(x) (S_n(psi_x^m f))(x))
///                        - m (S_n(psi_x^{m-1} f))(x)].
/// For polynomial f the left side is the exact x-derivative of
/// sum_k f^{(k)}(x)/k! mu_{n,m+k}(x). Families without an evaluator use that
/// representation on the right side as well.
Number psi_m_derivative_identity_check(const OperatorFamily& family, const SmoothFunction& f, int m, int n,
                                       const Rat& x, const EvalOptions& options = {});

}  // namespace expasym
