#include "expasym/verify/study.hpp"

#include <cmath>
#include <future>

#include "expasym/error.hpp"
#include "expasym/expansion/expansion.hpp"
#include "expasym/moments/moments.hpp"
#include "expasym/verify/fit.hpp"

namespace expasym {

namespace {

constexpr double kSlopeSlack = 0.75;
constexpr double kRatioLow = 0.35;
constexpr double kRatioHigh = 0.65;

void check_dyadic(const std::vector<long>& grid) {
  if (grid.empty()) throw Error(ErrorKind::GridNotDyadic, "verify", "empty grid");
  if (grid.front() < 1) throw Error(ErrorKind::GridNotDyadic, "verify", "grid must start at n >= 1");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] != 2 * grid[i - 1])
      throw Error(ErrorKind::GridNotDyadic, "verify",
                  "grid must double at every step, got " + std::to_string(grid[i - 1]) + " then " +
                      std::to_string(grid[i]));
}

void check_interior(const OperatorFamily& family, const Rat& x) {
  if (!family.interval().interior(x))
    throw Error(ErrorKind::OutOfDomain, "verify",
                "x = " + to_string(x) + " must be interior to " + family.interval().to_string());
}

// Runs fn(i) for every grid index, optionally on worker threads, each at
// the requested precision; results come back in grid order.
template <class Fn>
auto map_grid(std::size_t count, const StudyOptions& options, Fn&& fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out;
  out.reserve(count);
  if (!options.parallel) {
    PrecisionScope scope(options.precision_bits);
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
  }
  std::vector<std::future<Result>> jobs;
  for (std::size_t i = 0; i < count; ++i)
    jobs.push_back(std::async(std::launch::async, [&, i] {
      PrecisionScope scope(options.precision_bits);
      return fn(i);
    }));
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

bool below_floor(const Number& value, const BigFloat& floor) {
  if (value.is_exact()) return value.exact() == 0;
  return abs(value.approx()) <= floor;
}

ConvergenceReport base_report(std::string kind, const OperatorFamily& family, const SmoothFunction& f, const Rat& x,
                              int r, int q, const std::vector<long>& grid, const StudyOptions& options) {
  ConvergenceReport rep;
  rep.kind = std::move(kind);
  rep.family_id = family.name();
  rep.f_description = f.describe();
  rep.f_spec = f.spec();
  rep.x = x;
  rep.r = r;
  rep.q = q;
  rep.grid = grid;
  rep.precision_bits = options.precision_bits;
  rep.tol = options.eval.tol.to_pretty_string(6);
  return rep;
}

void fit_into(ConvergenceReport& rep, const std::vector<Number>& cleaned) {
  try {
    const OrderFit fit = fit_order(rep.grid, cleaned);
    rep.fitted_order = fit.slope;
    rep.r_squared = fit.r_squared;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AllResidualsZero) {
      rep.all_zero = true;
      rep.note = "all residuals vanish";
    } else {
      rep.note = e.what();
    }
  }
}

}  // namespace

std::vector<long> dyadic_grid(long n0, int levels) {
  if (n0 < 1 || levels < 1) throw Error(ErrorKind::InvalidArgument, "verify", "grid needs n0 >= 1 and levels >= 1");
  std::vector<long> grid;
  for (int i = 0; i < levels; ++i) grid.push_back(n0 << i);
  return grid;
}

ConvergenceReport residual_study(const OperatorFamily& family, const SmoothFunction& f, const Rat& x, int r, int q,
                                 const std::vector<long>& grid, const StudyOptions& options) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "verify", "q must be at least 1");
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "verify", "r must be non-negative");
  check_dyadic(grid);
  check_interior(family, x);
  f.require_derivatives(2 * q + r + 2);
  if (!family.has_evaluator()) throw Error(ErrorKind::NoEvaluator, "verify", family.name() + " has no evaluator");

  auto rep = base_report("residual", family, f, x, r, q, grid, options);
  central_moments(family, 2 * q);  // fill the cache before fanning out
  struct Point {
    Number value;
    Number prediction;
  };
  auto points = map_grid(grid.size(), options, [&](std::size_t i) {
    const int n = static_cast<int>(grid[i]);
    return Point{evaluate_operator(family, f, n, x, r, options.eval),
                 evaluate_derivative_expansion(family, f, x, Rat(n), q, r)};
  });

  PrecisionScope scope(options.precision_bits);
  const BigFloat floor = BigFloat(16L) * options.eval.tol;
  std::vector<Number> cleaned;
  for (auto& p : points) {
    Number residual = p.value - p.prediction;
    const bool zero = below_floor(residual, floor);
    if (zero) ++rep.zero_residuals;
    cleaned.push_back(zero ? Number(Rat(0)) : residual);
    rep.values.push_back(std::move(p.value));
    rep.predictions.push_back(std::move(p.prediction));
    rep.residuals.push_back(std::move(residual));
  }
  for (std::size_t i = 1; i < cleaned.size(); ++i) {
    if (cleaned[i - 1].is_zero()) continue;
    rep.ratio_track.push_back(std::exp(cleaned[i].approx(64).log_abs() - cleaned[i - 1].approx(64).log_abs()));
  }
  fit_into(rep, cleaned);
  rep.pass = rep.all_zero || (rep.fitted_order && *rep.fitted_order <= -(q + kSlopeSlack));
  return rep;
}

ConvergenceReport voronovskaja_study(const OperatorFamily& family, const SmoothFunction& f, const Rat& x, int r,
                                     const std::vector<long>& grid, const StudyOptions& options) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "verify", "r must be non-negative");
  if (!family.is_exponential_type())
    throw Error(ErrorKind::NotPureExponentialIndex, "verify", family.name() + " is not of exponential type");
  check_dyadic(grid);
  check_interior(family, x);
  f.require_derivatives(2 * r + 4);
  if (!family.has_evaluator()) throw Error(ErrorKind::NoEvaluator, "verify", family.name() + " has no evaluator");

  auto rep = base_report("voronovskaja", family, f, x, r, 1, grid, options);
  Number limit;
  Number target;
  {
    PrecisionScope scope(options.precision_bits);
    limit = voronovskaja_limit(family, f, x, r);
    target = f.derivative_at(r, x);
  }
  auto scaled = map_grid(grid.size(), options, [&](std::size_t i) {
    const int n = static_cast<int>(grid[i]);
    return Number(Rat(n)) * (evaluate_operator(family, f, n, x, r, options.eval) - target);
  });

  PrecisionScope scope(options.precision_bits);
  std::vector<Number> cleaned;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Number d = scaled[i] - limit;
    const BigFloat floor = BigFloat(16L * grid[i]) * options.eval.tol;
    const bool zero = below_floor(d, floor);
    if (zero) ++rep.zero_residuals;
    cleaned.push_back(zero ? Number(Rat(0)) : d);
    rep.values.push_back(scaled[i]);
    rep.predictions.push_back(limit);
    rep.residuals.push_back(std::move(d));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < cleaned.size(); ++i) {
    if (cleaned[i - 1].is_zero()) {
      if (!cleaned[i].is_zero()) decreasing = false;
      continue;
    }
    const double ratio = std::exp(cleaned[i].approx(64).log_abs() - cleaned[i - 1].approx(64).log_abs());
    rep.ratio_track.push_back(ratio);
    if (ratio >= 1.0) decreasing = false;
  }
  fit_into(rep, cleaned);
  if (rep.all_zero) {
    rep.pass = true;
    return rep;
  }
  bool in_band = !rep.ratio_track.empty();
  const std::size_t upper = rep.ratio_track.size() / 2;
  for (std::size_t i = upper; i < rep.ratio_track.size(); ++i)
    if (rep.ratio_track[i] < kRatioLow || rep.ratio_track[i] > kRatioHigh) in_band = false;
  rep.pass = decreasing && in_band && rep.ratio_track.size() + 1 == cleaned.size();
  return rep;
}

std::vector<std::vector<Number>> richardson(const std::vector<long>& grid, const std::vector<Number>& values,
                                            const std::vector<int>& orders) {
  check_dyadic(grid);
  if (grid.size() != values.size())
    throw Error(ErrorKind::InvalidArgument, "verify", "grid and values differ in length");
  if (orders.size() >= values.size())
    throw Error(ErrorKind::InvalidArgument, "verify",
                std::to_string(orders.size()) + " elimination levels need more than " +
                    std::to_string(values.size()) + " values");
  std::vector<std::vector<Number>> levels{values};
  for (int p : orders) {
    if (p < 1) throw Error(ErrorKind::InvalidArgument, "verify", "elimination orders must be positive");
    BigInt two_p;
    mpz_ui_pow_ui(two_p.get_mpz_t(), 2, static_cast<unsigned long>(p));
    const Number factor{Rat(two_p)};
    const Number inverse{Rat(BigInt(1), BigInt(two_p - 1))};
    const auto& prev = levels.back();
    std::vector<Number> next;
    for (std::size_t j = 0; j + 1 < prev.size(); ++j) next.push_back((factor * prev[j + 1] - prev[j]) * inverse);
    levels.push_back(std::move(next));
  }
  return levels;
}

namespace {

Rat index_over_phi(const OperatorFamily& family, int n, const Rat& x) {
  if (!family.interval().contains(x))
    throw Error(ErrorKind::OutOfDomain, "verify", "x = " + to_string(x) + " is outside " + family.interval().to_string());
  const Rat phi = family.phi()(x);
  if (phi == 0) throw Error(ErrorKind::PhiVanishes, "verify", "phi(" + to_string(x) + ") = 0");
  return family.lambda()(Rat(n)) / phi;
}

EvalOptions tightened(const EvalOptions& options, const Rat& ratio) {
  EvalOptions inner = options;
  inner.tol = options.tol / BigFloat(Rat(1000 * (1 + abs(ratio))));
  return inner;
}

// sum_k f^{(k)}(x)/k! mu_{n,m+k}(x) as a symbolic polynomial in x.
MomentPoly symbolic_psi_moment(const MomentTable& table, const SmoothFunction& f, int m) {
  MomentPoly out;
  if (m < 0) return out;
  const int degree = f.factor().degree();
  for (int k = 0; k <= degree; ++k) {
    const Poly weight = f.derivative_poly(k) * Rat(BigInt(1), factorial(static_cast<unsigned long>(k)));
    out += MomentPoly::from_x(weight) * table[m + k];
  }
  return out;
}

}  // namespace

Number ode_identity_check(const OperatorFamily& family, const SmoothFunction& f, int n, const Rat& x,
                          const EvalOptions& options) {
  const Rat ratio = index_over_phi(family, n, x);
  const EvalOptions inner = tightened(options, ratio);
  const Number derivative = evaluate_operator(family, f, n, x, 1, inner);
  const Number shifted = evaluate_operator(family, f.times(psi_power(x, 1)), n, x, 0, inner);
  const Number first_moment = central_moment_direct(family, n, x, 1, inner);
  const Number plain = evaluate_operator(family, f, n, x, 0, inner);
  return derivative - Number(ratio) * (shifted - first_moment * plain);
}

Number psi_m_derivative_identity_check(const OperatorFamily& family, const SmoothFunction& f, int m, int n,
                                       const Rat& x, const EvalOptions& options) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "verify", "m must be non-negative");
  const Rat ratio = index_over_phi(family, n, x);
  const EvalOptions inner = tightened(options, ratio);
  const Rat nn(n);

  std::optional<MomentTable> table;
  if (f.is_polynomial()) table = central_moments(family, m + 1 + std::max(f.factor().degree(), 0));

  Number lhs;
  if (table) {
    lhs = Number(symbolic_psi_moment(*table, f, m).dx()(nn, x));
  } else {
    if (!family.has_evaluator())
      throw Error(ErrorKind::NoEvaluator, "verify", family.name() + " needs polynomial f without an evaluator");
    // d/dx of sum_j C(m,j) (-x)^{m-j} (S_n(e_j f))(x)
    lhs = m > 0 ? Number(Rat(-m)) * evaluate_operator(family, f.times(psi_power(x, m - 1)), n, x, 0, inner)
                : Number(Rat(0));
    for (int j = 0; j <= m; ++j) {
      const Rat c = Rat(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j))) *
                    pow(Rat(-x), static_cast<unsigned long>(m - j));
      lhs = lhs + Number(c) * evaluate_operator(family, f.times(Poly::monomial(1, j)), n, x, 1, inner);
    }
  }

  auto moment_of = [&](int order) -> Number {
    if (order < 0) return Number(Rat(0));
    if (family.has_evaluator()) return evaluate_operator(family, f.times(psi_power(x, order)), n, x, 0, inner);
    return Number(symbolic_psi_moment(*table, f, order)(nn, x));
  };
  const Number first_moment = family.has_evaluator() ? central_moment_direct(family, n, x, 1, inner)
                                                     : Number(family.mu1()(nn, x));
  const Number rhs = Number(ratio) * (moment_of(m + 1) - first_moment * moment_of(m)) -
                     Number(Rat(m)) * moment_of(m - 1);
  return lhs - rhs;
}

}  // namespace expasym
