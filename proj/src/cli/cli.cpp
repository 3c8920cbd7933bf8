#include "expasym/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "expasym/error.hpp"
#include "expasym/expansion/expansion.hpp"
#include "expasym/moments/moments.hpp"
#include "expasym/verify/fit.hpp"
#include "expasym/verify/report.hpp"
#include "expasym/verify/study.hpp"
#include "json.hpp"

namespace expasym {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string subcommand;
  std::string family = "bernstein";
  std::string f = "exp:1";
  std::string x;
  int n = 16;
  int r = 0;
  int q = 1;
  int s_max = 6;
  int k_max = 2;
  int m_max = 2;
  std::string grid = "64:6";
  std::string orders = "1";
  unsigned precision = BigFloat::kDefaultPrecision;
  std::string tol = "1e-30";
  std::string format = "text";
  std::string output;
  int digits = 25;
  int quad_order = 32;
};

// Parsed and validated config; building one never starts a computation.
struct Prepared {
  const RunConfig& cfg;
  OperatorFamily family;
  std::optional<SmoothFunction> f;
  std::optional<Rat> x;
  std::vector<long> grid;
  std::vector<int> orders;
  StudyOptions options;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::InvalidArgument, "cli", what); }

std::vector<long> parse_grid(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) usage("grid must look like n0:levels, got '" + spec + "'");
  try {
    std::size_t used = 0;
    const long n0 = std::stol(spec.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(spec);
    const std::string tail = spec.substr(colon + 1);
    const int levels = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(spec);
    if (levels > 20 || n0 > (1L << 20)) usage("grid " + spec + " is too large");
    return dyadic_grid(n0, levels);
  } catch (const std::logic_error&) {
    usage("grid must look like n0:levels, got '" + spec + "'");
  }
}

std::vector<int> parse_orders(const std::string& spec) {
  std::vector<int> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int p = std::stoi(item, &used);
      if (used != item.size() || p < 1) throw std::invalid_argument(item);
      out.push_back(p);
    } catch (const std::logic_error&) {
      usage("orders must be a comma separated list of positive integers, got '" + spec + "'");
    }
  }
  if (out.empty()) usage("orders must not be empty");
  return out;
}

// Families and functions are parsed for every subcommand that uses them;
// the remaining checks mirror the preconditions of the routine called.
Prepared prepare(const RunConfig& cfg) {
  Prepared p{cfg, OperatorFamily::from_name(cfg.family), std::nullopt, std::nullopt, {}, {}, {}};
  const std::string& sub = cfg.subcommand;
  if (cfg.precision < BigFloat::kMinPrecision)
    usage("precision must be at least " + std::to_string(BigFloat::kMinPrecision) + " bits");
  if (cfg.digits < 1 || cfg.digits > 1000) usage("digits must lie in 1..1000");
  p.options.precision_bits = cfg.precision;
  {
    PrecisionScope scope(cfg.precision);
    p.options.eval.tol = BigFloat::parse(cfg.tol);
  }
  if (!(p.options.eval.tol > BigFloat(0L))) usage("tol must be positive");
  p.options.eval.quad_order = cfg.quad_order;
  if (cfg.quad_order < 16) usage("quad-order must be at least 16");

  if (sub == "moments") {
    if (cfg.s_max < 0 || cfg.s_max > 64) usage("s-max must lie in 0..64");
    return p;
  }
  if (sub == "expansion") {
    if (cfg.k_max < 0 || cfg.k_max > 16) usage("k-max must lie in 0..16");
    if (!p.family.has_unit_index())
      throw Error(ErrorKind::NotPureExponentialIndex, "expansion", p.family.name() + " does not have lambda_n = n");
  }
  if (cfg.r < 0) usage("r must be non-negative");
  if (sub == "expansion" && cfg.x.empty()) return p;
  p.f = SmoothFunction::parse(cfg.f);
  if (!p.f->admissible_on(p.family.interval()))
    throw Error(ErrorKind::GrowthBoundViolated, "expansion",
                p.f->describe() + " is not polynomially bounded on " + p.family.interval().to_string());
  if (!cfg.x.empty()) p.x = parse_rat(cfg.x);
  if (sub == "expansion") {
    if (p.x && !p.family.interval().contains(*p.x))
      throw Error(ErrorKind::OutOfDomain, "cli", "x = " + cfg.x + " is outside " + p.family.interval().to_string());
    return p;
  }
  if (!p.x) usage("--x is required for " + sub);
  const bool interior_needed = sub != "evaluate";
  if (interior_needed ? !p.family.interval().interior(*p.x) : !p.family.interval().contains(*p.x))
    throw Error(ErrorKind::OutOfDomain, "cli",
                "x = " + cfg.x + (interior_needed ? " must be interior to " : " is outside ") +
                    p.family.interval().to_string());
  if (sub == "identities") {
    if (cfg.m_max < 0 || cfg.m_max > 8) usage("m-max must lie in 0..8");
    if (p.family.phi()(*p.x) == 0) throw Error(ErrorKind::PhiVanishes, "cli", "phi vanishes at x = " + cfg.x);
    p.grid = parse_grid(cfg.grid);
    if (!p.f->is_polynomial() && !p.family.has_evaluator())
      throw Error(ErrorKind::NoEvaluator, "cli", p.family.name() + " supports polynomial f only");
    return p;
  }
  if (!p.family.has_evaluator())
    throw Error(ErrorKind::NoEvaluator, "cli", p.family.name() + " has no direct evaluator");
  if (sub == "evaluate") {
    if (cfg.n < 1) usage("n must be positive");
    if (p.family.id() == FamilyId::bernstein && cfg.r > cfg.n)
      throw Error(ErrorKind::DerivativeOrderExceedsDegree, "operators", "r exceeds the degree n of B_n");
    p.f->require_derivatives(cfg.r);
    return p;
  }
  p.grid = parse_grid(cfg.grid);
  if (p.family.id() == FamilyId::bernstein && cfg.r > p.grid.front())
    throw Error(ErrorKind::DerivativeOrderExceedsDegree, "operators", "r exceeds the smallest degree in the grid");
  if (sub == "verify") {
    if (cfg.q < 1 || cfg.q > 8) usage("q must lie in 1..8");
    p.f->require_derivatives(2 * cfg.q + cfg.r + 2);
    return p;
  }
  if (!p.family.is_exponential_type())
    throw Error(ErrorKind::NotPureExponentialIndex, "expansion",
                p.family.name() + " is not of exponential type; the limit needs lambda_n = n and mu_{n,1} = 0");
  p.f->require_derivatives(2 * cfg.r + 4);
  if (sub == "extrapolate") {
    p.orders = parse_orders(cfg.orders);
    if (p.orders.size() >= p.grid.size()) usage("need more grid levels than elimination orders");
  }
  return p;
}

std::string poly_over_n(const Poly& g, int j) {
  std::string body = g.to_string("x");
  if (j == 0) return body;
  if (body.find(' ') != std::string::npos || body.find('/') != std::string::npos) body = "(" + body + ")";
  return body + (j == 1 ? "/n" : "/n^" + std::to_string(j));
}

struct ExpansionText {
  std::string text;
  bool exact;
};

// mu as sum_j g_j(x)/n^j; terminates for the built-in families.
ExpansionText moment_text(const MomentPoly& mu, int order) {
  const auto terms = moment_expansion(mu, order);
  MomentPoly resummed;
  std::string text;
  for (const auto& [j, g] : terms) {
    resummed += MomentPoly::from_x(g) * RatFuncN::inverse_power(j);
    std::string piece = poly_over_n(g, j);
    if (text.empty()) {
      text = piece;
    } else if (piece.front() == '-') {
      text += " - " + piece.substr(1);
    } else {
      text += " + " + piece;
    }
  }
  if (text.empty()) text = "0";
  const bool exact = resummed == mu;
  if (!exact) text += " + O(1/n^" + std::to_string(order + 1) + ")";
  return {text, exact};
}

std::string run_moments(const Prepared& p) {
  const auto table = central_moments(p.family, p.cfg.s_max);
  const std::string& format = p.cfg.format;
  if (format == "json") {
    Json j;
    j["family"] = p.family.name();
    j["phi"] = p.family.phi().to_string("x");
    j["lambda"] = p.family.lambda().to_string();
    j["s_max"] = p.cfg.s_max;
    Json rows = Json::array();
    for (int s = 0; s <= table.s_max(); ++s) {
      Json row;
      row["s"] = s;
      row["moment"] = table[s].to_string();
      const auto shown = moment_text(table[s], s + 1);
      row["expansion"] = shown.text;
      row["terminates"] = shown.exact;
      try {
        row["vanishing_order"] = vanishing_order(table[s]);
      } catch (const Error&) {
        row["vanishing_order"] = nullptr;
      }
      rows.push_back(row);
    }
    j["moments"] = rows;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "s,j,coefficient\n";
    for (int s = 0; s <= table.s_max(); ++s)
      for (const auto& [j, g] : moment_expansion(table[s], s + 1)) os << s << ',' << j << ',' << g.to_string("x") << '\n';
    return os.str();
  }
  os << "family: " << p.family.name() << "\nphi(x) = " << p.family.phi().to_string("x")
     << "\nlambda_n = " << p.family.lambda().to_string() << '\n';
  for (int s = 0; s <= table.s_max(); ++s) {
    const auto shown = moment_text(table[s], s + 1);
    os << "mu_{n," << s << "}(x) = " << shown.text << '\n';
    if (!shown.exact) os << "  exact: " << table[s].to_string() << '\n';
  }
  return os.str();
}

std::string run_expansion(const Prepared& p) {
  const auto coeffs = complete_coeffs(p.family, p.cfg.k_max);
  const std::string& format = p.cfg.format;
  std::vector<std::optional<Number>> values(coeffs.size());
  if (p.x) {
    PrecisionScope scope(p.options.precision_bits);
    for (std::size_t k = 0; k < coeffs.size(); ++k) values[k] = evaluate_coefficient(coeffs[k], *p.f, *p.x, p.cfg.r);
  }
  if (format == "json") {
    Json j;
    j["family"] = p.family.name();
    j["f"] = p.f->describe();
    j["x"] = p.x ? Json(to_string(*p.x)) : Json(nullptr);
    j["r"] = p.cfg.r;
    Json rows = Json::array();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Json row;
      row["k"] = coeffs[k].k;
      Json terms = Json::object();
      for (const auto& [s, w] : coeffs[k].terms) terms[std::to_string(s)] = w.to_string("x");
      row["weights"] = terms;
      row["value"] = values[k] ? Json(values[k]->to_string(p.cfg.digits)) : Json(nullptr);
      rows.push_back(row);
    }
    j["coefficients"] = rows;
    j["config"] = {{"precision_bits", p.options.precision_bits}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "k,s,weight\n";
    for (const auto& a : coeffs)
      for (const auto& [s, w] : a.terms) os << a.k << ',' << s << ',' << w.to_string("x") << '\n';
    return os.str();
  }
  os << "family: " << p.family.name() << '\n';
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    os << "a_" << coeffs[k].k << "(f, x) =";
    bool first = true;
    for (const auto& [s, w] : coeffs[k].terms) {
      os << (first ? " " : " + ") << '(' << w.to_string("x") << ") f^(" << s << ")(x)";
      first = false;
    }
    if (first) os << " 0";
    os << '\n';
    if (values[k])
      os << "  (d/dx)^" << p.cfg.r << " a_" << coeffs[k].k << " at x = " << to_string(*p.x) << ": "
         << values[k]->to_string(p.cfg.digits) << '\n';
  }
  return os.str();
}

std::string run_evaluate(const Prepared& p) {
  PrecisionScope scope(p.options.precision_bits);
  const Number value = evaluate_operator(p.family, *p.f, p.cfg.n, *p.x, p.cfg.r, p.options.eval);
  const std::string shown = value.to_string(p.cfg.digits);
  const std::string& format = p.cfg.format;
  if (format == "json") {
    Json j;
    j["family"] = p.family.name();
    j["f"] = p.f->describe();
    j["x"] = to_string(*p.x);
    j["n"] = p.cfg.n;
    j["r"] = p.cfg.r;
    j["value"] = shown;
    j["exact"] = value.is_exact();
    j["config"] = {{"precision_bits", p.options.precision_bits}, {"tol", p.cfg.tol}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "n,x,r,value\n" << p.cfg.n << ',' << to_string(*p.x) << ',' << p.cfg.r << ',' << shown << '\n';
    return os.str();
  }
  os << "family: " << p.family.name() << "\nf(t) = " << p.f->describe() << "\nx = " << to_string(*p.x)
     << "\nn = " << p.cfg.n << "\nr = " << p.cfg.r << "\nvalue: " << shown << '\n';
  return os.str();
}

std::string render(const ConvergenceReport& rep, const RunConfig& cfg) {
  if (cfg.format == "json") return report_to_json(rep, cfg.digits);
  if (cfg.format == "csv") return report_to_csv(rep, cfg.digits);
  return report_to_text(rep, cfg.digits);
}

std::optional<double> level_order(const std::vector<long>& grid, const std::vector<Number>& errors) {
  try {
    return fit_order(grid, errors).slope;
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct Extrapolation {
  std::string text;
  bool pass;
};

// Richardson levels on n ((S_n f)^{(r)} - f^{(r)}) against the Voronovskaja
// limit. Each level must improve the empirical order by at least 0.8.
Extrapolation run_extrapolate(const Prepared& p) {
  const auto rep = voronovskaja_study(p.family, *p.f, *p.x, p.cfg.r, p.grid, p.options);
  PrecisionScope scope(p.options.precision_bits);
  const auto levels = richardson(p.grid, rep.values, p.orders);
  const Number& limit = rep.predictions.front();
  struct Level {
    std::vector<long> grid;
    std::vector<Number> errors;
    std::optional<double> order;
  };
  std::vector<Level> out;
  for (std::size_t m = 0; m < levels.size(); ++m) {
    Level level;
    for (std::size_t j = 0; j < levels[m].size(); ++j) {
      level.grid.push_back(p.grid[j + m]);
      level.errors.push_back(levels[m][j] - limit);
    }
    level.order = level_order(level.grid, level.errors);
    out.push_back(std::move(level));
  }
  bool pass = true;
  for (std::size_t m = 1; m < out.size(); ++m)
    if (out[m - 1].order && (!out[m].order || *out[m].order > *out[m - 1].order - 0.8)) pass = false;
  if (!out.front().order) pass = false;

  const int digits = p.cfg.digits;
  std::ostringstream os;
  if (p.cfg.format == "json") {
    Json j;
    j["kind"] = "extrapolate";
    j["family"] = p.family.name();
    j["f"] = p.f->describe();
    j["x"] = to_string(*p.x);
    j["r"] = p.cfg.r;
    j["grid"] = p.grid;
    j["orders"] = p.orders;
    j["limit"] = limit.to_string(digits);
    Json rows = Json::array();
    for (const auto& level : out) {
      Json row;
      row["grid"] = level.grid;
      Json errs = Json::array();
      for (const auto& e : level.errors) errs.push_back(e.to_string(digits));
      row["errors"] = errs;
      row["fitted_order"] = level.order ? Json(*level.order) : Json(nullptr);
      rows.push_back(row);
    }
    j["levels"] = rows;
    j["pass"] = pass;
    j["config"] = {{"precision_bits", p.options.precision_bits}, {"tol", p.cfg.tol}};
    return {j.dump(2) + "\n", pass};
  }
  if (p.cfg.format == "csv") {
    os << "level,n,error\n";
    for (std::size_t m = 0; m < out.size(); ++m)
      for (std::size_t j = 0; j < out[m].grid.size(); ++j)
        os << m << ',' << out[m].grid[j] << ',' << out[m].errors[j].to_string(digits) << '\n';
    return {os.str(), pass};
  }
  os << "extrapolation: family " << p.family.name() << ", f(t) = " << p.f->describe() << ", x = "
     << to_string(*p.x) << ", r = " << p.cfg.r << "\nlimit " << limit.to_string(digits) << '\n';
  for (std::size_t m = 0; m < out.size(); ++m) {
    os << "level " << m;
    if (m > 0) os << " (eliminated n^-" << p.orders[m - 1] << ")";
    os << ": fitted order ";
    if (out[m].order) {
      os << *out[m].order;
    } else {
      os << "n/a";
    }
    os << '\n';
    for (std::size_t j = 0; j < out[m].grid.size(); ++j)
      os << "  n = " << out[m].grid[j] << "  error " << out[m].errors[j].to_string(digits) << '\n';
  }
  os << (pass ? "PASS" : "FAIL") << '\n';
  return {os.str(), pass};
}

Extrapolation run_identities(const Prepared& p) {
  struct Row {
    std::string check;
    int m;
    long n;
    Number defect;
  };
  std::vector<Row> rows;
  PrecisionScope scope(p.options.precision_bits);
  for (long n : p.grid) {
    const int ni = static_cast<int>(n);
    if (p.family.has_evaluator())
      rows.push_back({"ode", -1, n, ode_identity_check(p.family, *p.f, ni, *p.x, p.options.eval)});
    for (int m = 0; m <= p.cfg.m_max; ++m)
      rows.push_back({"psi_m", m, n, psi_m_derivative_identity_check(p.family, *p.f, m, ni, *p.x, p.options.eval)});
  }
  const BigFloat bound = BigFloat(10L) * p.options.eval.tol;
  bool pass = true;
  for (const auto& row : rows) {
    if (row.defect.is_exact() ? !row.defect.is_zero() : !(abs(row.defect.approx()) < bound)) pass = false;
  }
  const int digits = p.cfg.digits;
  std::ostringstream os;
  if (p.cfg.format == "json") {
    Json j;
    j["kind"] = "identities";
    j["family"] = p.family.name();
    j["f"] = p.f->describe();
    j["x"] = to_string(*p.x);
    j["grid"] = p.grid;
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json e;
      e["check"] = row.check;
      e["m"] = row.m < 0 ? Json(nullptr) : Json(row.m);
      e["n"] = row.n;
      e["defect"] = row.defect.to_string(digits);
      e["exact"] = row.defect.is_exact();
      arr.push_back(e);
    }
    j["defects"] = arr;
    j["pass"] = pass;
    j["config"] = {{"precision_bits", p.options.precision_bits}, {"tol", p.cfg.tol}};
    return {j.dump(2) + "\n", pass};
  }
  if (p.cfg.format == "csv") {
    os << "check,m,n,defect\n";
    for (const auto& row : rows)
      os << row.check << ',' << (row.m < 0 ? std::string() : std::to_string(row.m)) << ',' << row.n << ','
         << row.defect.to_string(digits) << '\n';
    return {os.str(), pass};
  }
  os << "identities: family " << p.family.name() << ", f(t) = " << p.f->describe() << ", x = " << to_string(*p.x)
     << '\n';
  if (!p.family.has_evaluator()) os << "ode check skipped: no direct evaluator\n";
  for (const auto& row : rows) {
    os << "  " << row.check;
    if (row.m >= 0) os << " m = " << row.m;
    os << "  n = " << row.n << "  defect " << row.defect.to_string(digits) << '\n';
  }
  os << (pass ? "PASS" : "FAIL") << '\n';
  return {os.str(), pass};
}

Extrapolation dispatch(const Prepared& p) {
  const std::string& sub = p.cfg.subcommand;
  if (sub == "moments") return {run_moments(p), true};
  if (sub == "expansion") return {run_expansion(p), true};
  if (sub == "evaluate") return {run_evaluate(p), true};
  if (sub == "extrapolate") return run_extrapolate(p);
  if (sub == "identities") return run_identities(p);
  const auto rep = sub == "verify" ? residual_study(p.family, *p.f, *p.x, p.cfg.r, p.cfg.q, p.grid, p.options)
                                   : voronovskaja_study(p.family, *p.f, *p.x, p.cfg.r, p.grid, p.options);
  return {render(rep, p.cfg), rep.pass};
}

void print_error(std::ostream& err, const Error& e, const char* prefix = "error") {
  err << prefix << ": " << e.name() << " (" << e.module() << "): " << e.what() << '\n';
}

unsigned default_precision_from_env() {
  const char* env = std::getenv("EXPASYM_PRECISION_BITS");
  if (!env || !*env) return BigFloat::kDefaultPrecision;
  char* end = nullptr;
  const unsigned long bits = std::strtoul(env, &end, 10);
  if (*end != '\0' || bits < BigFloat::kMinPrecision || bits > (1UL << 20))
    usage(std::string("EXPASYM_PRECISION_BITS must be an integer >= ") + std::to_string(BigFloat::kMinPrecision) +
          ", got '" + env + "'");
  return static_cast<unsigned>(bits);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.precision = default_precision_from_env();
  } catch (const Error& e) {
    print_error(err, e, "usage error");
    return kExitUsage;
  }

  CLI::App app{"Exact and high precision checks of asymptotic expansions for exponential-type operators", "expasym"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "bernstein, szasz, baskakov, gauss_weierstrass or synthetic")
        ->capture_default_str();
    sub->add_option("--precision", cfg.precision, "working precision in bits (env EXPASYM_PRECISION_BITS)")
        ->capture_default_str();
    sub->add_option("--tol", cfg.tol, "absolute truncation tolerance")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--output", cfg.output, "write the report to this file instead of stdout");
    sub->add_option("--digits", cfg.digits, "significant digits of approximate values")->capture_default_str();
    sub->add_option("--quad-order", cfg.quad_order, "Gauss-Hermite nodes for gauss_weierstrass")
        ->capture_default_str();
  };
  auto function_args = [&](CLI::App* sub) {
    sub->add_option("--f", cfg.f, "poly:c0,c1,..., exp:a or sin:a,b")->capture_default_str();
    sub->add_option("--x", cfg.x, "evaluation point, e.g. 2/5");
    sub->add_option("--r", cfg.r, "derivative order")->capture_default_str();
  };

  auto* moments = app.add_subcommand("moments", "symbolic central moments");
  common(moments);
  moments->add_option("--s-max", cfg.s_max, "highest moment order")->capture_default_str();

  auto* expansion = app.add_subcommand("expansion", "coefficients a_k of the complete expansion");
  common(expansion);
  function_args(expansion);
  expansion->add_option("--k-max", cfg.k_max, "highest coefficient index")->capture_default_str();

  auto* evaluate = app.add_subcommand("evaluate", "evaluate (S_n f)^(r)(x)");
  common(evaluate);
  function_args(evaluate);
  evaluate->add_option("--n", cfg.n, "operator index")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "residual study of the truncated expansion");
  common(verify);
  function_args(verify);
  verify->add_option("--q", cfg.q, "truncation order")->capture_default_str();
  verify->add_option("--grid", cfg.grid, "dyadic grid n0:levels")->capture_default_str();

  auto* voronovskaja = app.add_subcommand("voronovskaja", "differentiated Voronovskaja study");
  common(voronovskaja);
  function_args(voronovskaja);
  voronovskaja->add_option("--grid", cfg.grid, "dyadic grid n0:levels")->capture_default_str();

  auto* extrapolate = app.add_subcommand("extrapolate", "Richardson extrapolation of the Voronovskaja sequence");
  common(extrapolate);
  function_args(extrapolate);
  extrapolate->add_option("--grid", cfg.grid, "dyadic grid n0:levels")->capture_default_str();
  extrapolate->add_option("--orders", cfg.orders, "eliminated exponents, e.g. 1,2")->capture_default_str();

  auto* identities = app.add_subcommand("identities", "defining ODE and moment derivative identities");
  common(identities);
  function_args(identities);
  identities->add_option("--grid", cfg.grid, "dyadic grid n0:levels of operator indices")->capture_default_str();
  identities->add_option("--m-max", cfg.m_max, "highest power of psi_x")->capture_default_str();

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nrun 'expasym --help' for the list of subcommands and flags\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  std::optional<Prepared> prepared;
  try {
    prepared.emplace(prepare(cfg));
  } catch (const Error& e) {
    print_error(err, e, "usage error");
    return kExitUsage;
  }

  Extrapolation result;
  try {
    result = dispatch(*prepared);
  } catch (const Error& e) {
    print_error(err, e);
    return kExitFail;
  }

  if (cfg.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    file << result.text;
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kExitFail;
    }
  }
  return result.pass ? kExitPass : kExitFail;
}

}  // namespace expasym
