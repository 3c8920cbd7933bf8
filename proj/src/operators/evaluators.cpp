#include "expasym/operators/evaluators.hpp"

#include <cmath>
#include <deque>

#include "expasym/error.hpp"
#include "expasym/operators/gauss_hermite.hpp"

namespace expasym {

namespace {

[[noreturn]] void out_of_domain(const std::string& what) { throw Error(ErrorKind::OutOfDomain, "operators", what); }

std::vector<Rat> difference_weights(int r) {
  std::vector<Rat> w;
  for (int i = 0; i <= r; ++i) {
    Rat c(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i)));
    w.push_back((r - i) % 2 == 0 ? c : Rat(-c));
  }
  return w;
}

// Sliding window over f(k h), k = 0, 1, ..., producing Delta_h^r f(k h).
class DifferenceStream {
 public:
  DifferenceStream(const SmoothFunction& f, int n, int r, unsigned bits)
      : f_(f), n_(n), r_(r), bits_(bits), next_(0) {
    for (const auto& w : difference_weights(r)) weights_.emplace_back(w, bits);
    while (static_cast<int>(window_.size()) <= r_) push();
  }
  BigFloat current() const {
    BigFloat acc(0L, bits_);
    for (std::size_t i = 0; i < weights_.size(); ++i) acc += weights_[i] * window_[i];
    return acc;
  }
  void advance() {
    window_.pop_front();
    push();
  }

 private:
  void push() {
    window_.push_back(f_.value(BigFloat(make_rat(next_, n_), bits_)));
    ++next_;
  }
  const SmoothFunction& f_;
  int n_;
  int r_;
  unsigned bits_;
  long next_;
  std::vector<BigFloat> weights_;
  std::deque<BigFloat> window_;
};

// Shared driver for the two infinite series. `ratio(k)` gives w_{k+1}/w_k
// as an exact rational. Both weight ratios decrease in k, so ratio(k+1) times
// the growth factor bounds every later term ratio and the tail is geometric.
template <class Ratio>
BigFloat series_eval(const SmoothFunction& f, int n, int r, const BigFloat& first_weight, const Rat& mean,
                     const BigFloat& prefactor, const BigFloat& tol, Ratio&& ratio) {
  const unsigned bits = std::max(first_weight.precision(), tol.precision());
  const auto major = f.majorant_nonnegative();
  const double growth_scale = std::ldexp(major.scale, r);  // |Delta^r f(u)| <= 2^r max |f|
  const BigFloat abs_prefactor = abs(prefactor);
  const long k_min = std::max<long>(static_cast<long>(std::ceil(4.0 * mean.get_d())), 64);
  DifferenceStream diffs(f, n, r, bits);
  BigFloat weight = first_weight;
  BigFloat sum(0L, bits);
  for (long k = 0;; ++k) {
    if (!weight.is_zero()) sum += weight * diffs.current();
    const Rat step = ratio(k);
    weight *= BigFloat(step, bits);
    diffs.advance();
    if (k + 1 >= k_min) {
      // Bound the tail starting at term k+1.
      if (weight.is_zero()) break;
      const double u = static_cast<double>(k + 1 + r) / n;
      const double growth_ratio = std::pow(1.0 + 1.0 / (n + k + 1.0 + r), major.degree);
      const double rho = ratio(k + 1).get_d() * growth_ratio;
      if (rho < 1.0) {
        const double majorant = growth_scale * std::pow(1.0 + u, major.degree) / (1.0 - rho);
        const BigFloat tail = abs(weight) * abs_prefactor * BigFloat(majorant, 64u);
        if (tail <= tol) break;
      }
    }
  }
  return prefactor * sum;
}

void check_growth(const OperatorFamily& family, const SmoothFunction& f) {
  if (!f.admissible_on(family.interval()))
    throw Error(ErrorKind::GrowthBoundViolated, "operators",
                f.describe() + " is not polynomially bounded on " + family.interval().to_string());
}

}  // namespace

Number forward_difference(const SmoothFunction& f, const Rat& t0, const Rat& h, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "operators", "difference order must be non-negative");
  if (!f.is_polynomial()) return Number(forward_difference(f, BigFloat(t0), BigFloat(h), r));
  const auto w = difference_weights(r);
  Rat acc = 0;
  for (int i = 0; i <= r; ++i) acc += w[static_cast<std::size_t>(i)] * f.value_exact(t0 + i * h);
  return Number(acc);
}

BigFloat forward_difference(const SmoothFunction& f, const BigFloat& t0, const BigFloat& h, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "operators", "difference order must be non-negative");
  const auto w = difference_weights(r);
  const unsigned bits = std::max(t0.precision(), h.precision());
  BigFloat acc(0L, bits);
  for (int i = 0; i <= r; ++i)
    acc += BigFloat(w[static_cast<std::size_t>(i)], bits) * f.value(t0 + BigFloat(static_cast<long>(i), bits) * h);
  return acc;
}

Number bernstein_eval(const SmoothFunction& f, int n, const Rat& x, int r) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "operators", "Bernstein degree must be positive");
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "operators", "derivative order must be non-negative");
  if (r > n)
    throw Error(ErrorKind::DerivativeOrderExceedsDegree, "operators",
                "derivative order " + std::to_string(r) + " exceeds degree " + std::to_string(n));
  if (x < 0 || x > 1) out_of_domain("Bernstein operators need x in [0, 1], got " + to_string(x));
  const int m = n - r;
  
  const Rat scale(falling_factorial(static_cast<unsigned long>(n), static_cast<unsigned long>(r)));
  const auto dw = difference_weights(r);

  if (f.is_polynomial()) {
    std::vector<Rat> values;
    for (int j = 0; j <= n; ++j) values.push_back(f.value_exact(make_rat(j, n)));
    auto delta = [&](int k) {
      Rat acc = 0;
      for (int i = 0; i <= r; ++i) acc += dw[static_cast<std::size_t>(i)] * values[static_cast<std::size_t>(k + i)];
      return acc;
    };
    if (x == 0) return Number(Rat(scale * delta(0)));
    if (x == 1) return Number(Rat(scale * delta(m)));
    Rat weight = pow(Rat(1 - x), static_cast<unsigned long>(m));
    const Rat odds = x / (1 - x);
    Rat acc = 0;
    for (int k = 0; k <= m; ++k) {
      acc += weight * delta(k);
      weight *= make_rat(m - k, k + 1) * odds;
    }
    return Number(Rat(scale * acc));
  }

  const unsigned bits = BigFloat::default_precision();
  std::vector<BigFloat> values;
  for (int j = 0; j <= n; ++j) values.push_back(f.value(BigFloat(make_rat(j, n), bits)));
  std::vector<BigFloat> bw;
  for (const auto& w : dw) bw.emplace_back(w, bits);
  auto delta = [&](int k) {
    BigFloat acc(0L, bits);
    for (int i = 0; i <= r; ++i) acc += bw[static_cast<std::size_t>(i)] * values[static_cast<std::size_t>(k + i)];
    return acc;
  };
  const BigFloat bscale(scale, bits);
  if (x == 0) return Number(BigFloat(bscale * delta(0)));
  if (x == 1) return Number(BigFloat(bscale * delta(m)));
  BigFloat weight = pow(BigFloat(Rat(1 - x), bits), m);
  const BigFloat odds(Rat(x / (1 - x)), bits);
  BigFloat acc(0L, bits);
  for (int k = 0; k <= m; ++k) {
    acc += weight * delta(k);
    weight *= BigFloat(make_rat(m - k, k + 1), bits) * odds;
  }
  return Number(BigFloat(bscale * acc));
}

BigFloat szasz_eval(const SmoothFunction& f, int n, const Rat& x, int r, const BigFloat& tol) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "operators", "operator index must be positive");
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "operators", "derivative order must be non-negative");
  if (x < 0) out_of_domain("Szasz-Mirakyan operators need x >= 0, got " + to_string(x));
  if (tol.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "operators", "tolerance must be positive");
  if (!f.admissible_on(OperatorFamily::szasz().interval()))
    throw Error(ErrorKind::GrowthBoundViolated, "operators", f.describe() + " is not polynomially bounded");
  const unsigned bits = BigFloat::default_precision();
  const Rat mean = n * x;
  const BigFloat first = exp(-BigFloat(mean, bits));
  const BigFloat prefactor = pow(BigFloat(static_cast<long>(n), bits), r);
  return series_eval(f, n, r, first, mean, prefactor, tol, [&](long k) { return Rat(mean / (k + 1)); });
}

BigFloat baskakov_eval(const SmoothFunction& f, int n, const Rat& x, int r, const BigFloat& tol) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "operators", "operator index must be positive");
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "operators", "derivative order must be non-negative");
  if (x < 0) out_of_domain("Baskakov operators need x >= 0, got " + to_string(x));
  if (tol.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "operators", "tolerance must be positive");
  if (!f.admissible_on(OperatorFamily::baskakov().interval()))
    throw Error(ErrorKind::GrowthBoundViolated, "operators", f.describe() + " is not polynomially bounded");
  const unsigned bits = BigFloat::default_precision();
  const long m = static_cast<long>(n) + r;
  const Rat odds = x / (1 + x);
  const BigFloat first = pow(BigFloat(Rat(1 + x), bits), -m);
  BigInt rising = 1;
  for (int i = 0; i < r; ++i) rising *= n + i;
  const BigFloat prefactor(Rat(rising), bits);
  return series_eval(f, n, r, first, Rat(n * x), prefactor, tol,
                     [&](long k) { return Rat(make_rat(m + k, k + 1) * odds); });
}

BigFloat gauss_weierstrass_eval(const SmoothFunction& f, int n, const Rat& x, int r, int quad_order,
                                const BigFloat& tol) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "operators", "operator index must be positive");
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "operators", "derivative order must be non-negative");
  if (quad_order < 16) throw Error(ErrorKind::InvalidArgument, "operators", "quadrature order must be at least 16");
  if (!f.admissible_on(OperatorFamily::gauss_weierstrass().interval()))
    throw Error(ErrorKind::GrowthBoundViolated, "operators", f.describe() + " is not polynomially bounded");
  const unsigned bits = BigFloat::default_precision();
  const BigFloat bx(x, bits);
  const BigFloat spread = sqrt(BigFloat(make_rat(2, n), bits));
  // d^r/dx^r exp(-n (t-x)^2 / 2) = (n/2)^{r/2} H_r(u) exp(-u^2), u = (t-x) sqrt(n/2)
  const BigFloat kernel_scale = pow(sqrt(BigFloat(make_rat(n, 2), bits)), r) / sqrt(const_pi(bits));
  auto quadrature = [&](int order) {
    const auto rule = gauss_hermite_rule(order, bits);
    BigFloat acc(0L, bits);
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      const BigFloat& u = rule->nodes[i];
      BigFloat h_prev(1L, bits);
      BigFloat h = r == 0 ? h_prev : BigFloat(2L, bits) * u;
      for (int k = 1; k < r; ++k) {
        BigFloat next = BigFloat(2L, bits) * u * h - BigFloat(2L * k, bits) * h_prev;
        h_prev = std::move(h);
        h = std::move(next);
      }
      acc += rule->weights[i] * h * f.value(bx + spread * u);
    }
    return kernel_scale * acc;
  };
  const BigFloat coarse = quadrature(quad_order);
  const BigFloat fine = quadrature(2 * quad_order);
  if (abs(fine - coarse) > tol)
    throw Error(ErrorKind::QuadratureNotConverged, "operators",
                "doubling the Gauss-Hermite order changed the result by " + abs(fine - coarse).to_string(6));
  return fine;
}

Number evaluate_operator(const OperatorFamily& family, const SmoothFunction& f, int n, const Rat& x, int r,
                         const EvalOptions& options) {
  if (!family.interval().contains(x))
    out_of_domain("x = " + to_string(x) + " is outside " + family.interval().to_string());
  check_growth(family, f);
  switch (family.id()) {
    case FamilyId::bernstein: return bernstein_eval(f, n, x, r);
    case FamilyId::szasz: return Number(szasz_eval(f, n, x, r, options.tol));
    case FamilyId::baskakov: return Number(baskakov_eval(f, n, x, r, options.tol));
    case FamilyId::gauss_weierstrass:
      return Number(gauss_weierstrass_eval(f, n, x, r, options.quad_order, options.tol));
    case FamilyId::custom: break;
  }
  throw Error(ErrorKind::NoEvaluator, "operators", family.name() + " has no direct evaluator");
}

Poly psi_power(const Rat& x, int s) { return Poly{Rat(-x), Rat(1)}.pow(static_cast<unsigned>(s)); }

Number central_moment_direct(const OperatorFamily& family, int n, const Rat& x, int s, const EvalOptions& options) {
  if (s < 0) throw Error(ErrorKind::InvalidArgument, "operators", "moment order must be non-negative");
  return evaluate_operator(family, SmoothFunction::polynomial(psi_power(x, s)), n, x, 0, options);
}

}  // namespace expasym
