#pragma once

#include <memory>
#include <vector>

#include "expasym/operators/bigfloat.hpp"

namespace expasym {

/// Nodes and weights for int f(u) exp(-u^2) du ~ sum_i w_i f(u_i).
struct GaussHermiteRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};

/// Rule with the given number of nodes at the given precision. Rules are
/// cached; the returned object is immutable.
std::shared_ptr<const GaussHermiteRule> gauss_hermite_rule(int order, unsigned bits);

}  // namespace expasym
