#include "expasym/verify/fit.hpp"

#include <cmath>

#include "expasym/error.hpp"

namespace expasym {

namespace {

OrderFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double count = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0;
  double sxy = 0;
  double syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return {slope, r2};
}

OrderFit fit_logs(const std::vector<long>& grid, const std::vector<double>& log_abs, std::size_t total) {
  if (log_abs.empty())
    throw Error(ErrorKind::AllResidualsZero, "verify", "all residuals are zero; the expansion is exact");
  if (log_abs.size() < 3)
    throw Error(ErrorKind::InvalidArgument, "verify",
                "order fit needs at least 3 nonzero residuals, got " + std::to_string(log_abs.size()) + " of " +
                    std::to_string(total));
  std::vector<double> xs;
  for (long n : grid) xs.push_back(std::log(static_cast<double>(n)));
  return least_squares(xs, log_abs);
}

}  // namespace

OrderFit fit_order(const std::vector<long>& grid, const std::vector<Number>& residuals) {
  if (grid.size() != residuals.size())
    throw Error(ErrorKind::InvalidArgument, "verify", "grid and residuals differ in length");
  std::vector<long> used;
  std::vector<double> logs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (residuals[i].is_zero()) continue;
    used.push_back(grid[i]);
    logs.push_back(residuals[i].approx(64).log_abs());
  }
  return fit_logs(used, logs, grid.size());
}

OrderFit fit_order(const std::vector<long>& grid, const std::vector<double>& residuals) {
  if (grid.size() != residuals.size())
    throw Error(ErrorKind::InvalidArgument, "verify", "grid and residuals differ in length");
  std::vector<long> used;
  std::vector<double> logs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (residuals[i] == 0) continue;
    used.push_back(grid[i]);
    logs.push_back(std::log(std::fabs(residuals[i])));
  }
  return fit_logs(used, logs, grid.size());
}

}  // namespace expasym
