#include "expasym/moments/moments.hpp"

#include <mutex>
#include <unordered_map>

#include "expasym/error.hpp"

namespace expasym {

std::vector<MomentPoly> moment_recursion(const Poly& phi, const RatFuncN& lambda, const MomentPoly& mu1, int s_max) {
  if (s_max < 0) throw Error(ErrorKind::InvalidArgument, "moments", "s_max must be non-negative");
  std::vector<MomentPoly> mu;
  mu.reserve(static_cast<std::size_t>(s_max) + 1);
  mu.emplace_back(Rat(1));
  if (s_max == 0) return mu;
  mu.push_back(mu1);
  const MomentPoly weight = MomentPoly::from_x(phi) * (RatFuncN(Rat(1)) / lambda);
  for (int s = 1; s < s_max; ++s) {
    const auto& cur = mu[static_cast<std::size_t>(s)];
    MomentPoly inner = mu[static_cast<std::size_t>(s) - 1] * RatFuncN(Rat(s));
    inner += cur.dx();
    MomentPoly next = mu1 * cur;
    next += weight * inner;
    mu.push_back(std::move(next));
  }
  return mu;
}

namespace {

struct MomentCache {
  std::mutex mutex;
  std::unordered_map<std::string, std::vector<MomentPoly>> tables;
};

MomentCache& cache() {
  static MomentCache instance;
  return instance;
}

}  // namespace

MomentTable central_moments(const OperatorFamily& family, int s_max) {
  if (s_max < 0) throw Error(ErrorKind::InvalidArgument, "moments", "s_max must be non-negative");
  const std::string key = family.key();
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  auto& stored = c.tables[key];
  if (static_cast<int>(stored.size()) <= s_max)
    stored = moment_recursion(family.phi(), family.lambda(), family.mu1(), s_max);
  return MomentTable{family.name(),
                     std::vector<MomentPoly>(stored.begin(), stored.begin() + s_max + 1)};
}

std::map<int, Poly> moment_expansion(const MomentPoly& mu, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "moments", "expansion order must be non-negative");
  return mu.expand(order);
}

Poly leading_term_closed_form(int order, const Poly& phi) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "moments", "moment order must be non-negative");
  const auto s = static_cast<unsigned long>(order / 2);
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, s);
  denom *= factorial(s);
  if (order % 2 == 0) {
    Rat c(factorial(2 * s), denom);
    c.canonicalize();
    return phi.pow(static_cast<unsigned>(s)) * c;
  }
  Rat c(BigInt(s) * factorial(2 * s + 1), 3 * denom);
  c.canonicalize();
  return phi.pow(static_cast<unsigned>(s)) * phi.derivative() * c;
}

int vanishing_order(const MomentPoly& mu) {
  if (mu.is_zero()) throw Error(ErrorKind::ZeroMoment, "moments", "the zero moment has no vanishing order");
  int best = 0;
  bool found = false;
  for (const auto& [k, c] : mu.terms()) {
    const int j = c.denominator().degree() - c.numerator().degree();
    if (!found || j < best) best = j;
    found = true;
  }
  return best;
}

MomentPoly raw_moment(const MomentTable& table, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "moments", "raw moment order must be non-negative");
  if (r > table.s_max())
    throw Error(ErrorKind::OrderTooLarge, "moments",
                "raw moment of order " + std::to_string(r) + " needs central moments up to " + std::to_string(r));
  MomentPoly out;
  for (int m = 0; m <= r; ++m) {
    const Rat c(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(m)));
    out += MomentPoly::from_x(Poly::monomial(c, r - m)) * table[m];
  }
  return out;
}

}  // namespace expasym
