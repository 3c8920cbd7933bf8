#pragma once

#include <vector>

#include "expasym/operators/bigfloat.hpp"

namespace expasym {

struct OrderFit {
  double slope;
  double r_squared;
};

/// Least-squares slope of log|residual| against log n over the nonzero
/// residuals. Throws AllResidualsZero when every residual vanishes and
/// InvalidArgument with fewer than three nonzero residuals.
OrderFit fit_order(const std::vector<long>& grid, const std::vector<Number>& residuals);

/// Same fit on plain doubles.
OrderFit fit_order(const std::vector<long>& grid, const std::vector<double>& residuals);

}  // namespace expasym
