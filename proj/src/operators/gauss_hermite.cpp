#include "expasym/operators/gauss_hermite.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "expasym/error.hpp"

namespace expasym {

namespace {

// Orthonormal Hermite recurrence; returns p_N(z) and p_{N-1}(z).
template <class T, class Sqrt>
std::pair<T, T> hermite_pair(const T& z, int order, const T& p0, Sqrt&& root) {
  T p1 = p0;
  T p2 = p0 * T(0);
  for (int j = 1; j <= order; ++j) {
    T p3 = p2;
    p2 = p1;
    p1 = z * root(2.0, j) * p2 - root(j - 1.0, j) * p3;
  }
  return {p1, p2};
}

std::vector<double> initial_nodes(int order) {
  // Positive nodes in decreasing order, refined by Newton in double.
  const int half = (order + 1) / 2;
  std::vector<double> x(static_cast<std::size_t>(half));
  const double p0 = std::pow(M_PI, -0.25);
  auto droot = [](double a, int j) { return std::sqrt(a / j); };
  double z = 0;
  for (int i = 0; i < half; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * order + 1) - 1.85575 * std::pow(2.0 * order + 1, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(order, 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[static_cast<std::size_t>(i) - 2];
    for (int it = 0; it < 100; ++it) {
      auto [p, pm1] = hermite_pair(z, order, p0, droot);
      const double dp = std::sqrt(2.0 * order) * pm1;
      const double step = p / dp;
      z -= step;
      if (std::fabs(step) < 1e-15 * std::max(1.0, std::fabs(z))) break;
    }
    x[static_cast<std::size_t>(i)] = z;
  }
  return x;
}

GaussHermiteRule build(int order, unsigned bits) {
  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order), BigFloat(0L, bits));
  rule.weights.resize(static_cast<std::size_t>(order), BigFloat(0L, bits));
  const BigFloat p0 = BigFloat(1L, bits) / sqrt(sqrt(const_pi(bits)));
  std::vector<BigFloat> roots_a;  // sqrt(2/j)
  std::vector<BigFloat> roots_b;  // sqrt((j-1)/j)
  for (int j = 1; j <= order; ++j) {
    roots_a.push_back(sqrt(BigFloat(make_rat(2, j), bits)));
    roots_b.push_back(sqrt(BigFloat(make_rat(j - 1, j), bits)));
  }
  auto broot = [&](double a, int j) -> const BigFloat& {
    return a == 2.0 ? roots_a[static_cast<std::size_t>(j) - 1] : roots_b[static_cast<std::size_t>(j) - 1];
  };
  const BigFloat scale = sqrt(BigFloat(2L * order, bits));
  const BigFloat eps = pow(BigFloat(2L, bits), -static_cast<long>(bits) + 8);
  const auto guesses = initial_nodes(order);
  for (std::size_t i = 0; i < guesses.size(); ++i) {
    BigFloat z(guesses[i], bits);
    BigFloat dp(0L, bits);
    for (int it = 0; it < 64; ++it) {
      auto [p, pm1] = hermite_pair(z, order, p0, broot);
      dp = scale * pm1;
      const BigFloat step = p / dp;
      z -= step;
      if (abs(step) <= eps * (abs(z) + BigFloat(1L, bits))) {
        auto refreshed = hermite_pair(z, order, p0, broot);
        dp = scale * refreshed.second;
        break;
      }
    }
    const BigFloat w = BigFloat(2L, bits) / (dp * dp);
    rule.nodes[i] = z;
    rule.weights[i] = w;
    rule.nodes[static_cast<std::size_t>(order) - 1 - i] = -z;
    rule.weights[static_cast<std::size_t>(order) - 1 - i] = w;
  }
  return rule;
}

}  // namespace

std::shared_ptr<const GaussHermiteRule> gauss_hermite_rule(int order, unsigned bits) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "operators", "quadrature order must be positive");
  static std::mutex mutex;
  static std::map<std::pair<int, unsigned>, std::shared_ptr<const GaussHermiteRule>> rules;
  std::lock_guard lock(mutex);
  auto& slot = rules[{order, bits}];
  if (!slot) slot = std::make_shared<const GaussHermiteRule>(build(order, bits));
  return slot;
}

}  // namespace expasym
