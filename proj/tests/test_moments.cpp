#include <vector>

#include "doctest.h"
#include "expasym/error.hpp"
#include "expasym/moments/moments.hpp"
#include "expasym/operators/evaluators.hpp"
#include "generators.hpp"

using namespace expasym;

namespace {

const Poly x = Poly::identity();

Poly d(const Poly& p, int k) { return p.derivative(k); }

// Closed forms of mu_{n,3..6} in terms of phi and its derivatives, keyed by
// the power of 1/n.
std::map<int, Poly> instance(int s, const Poly& p) {
  const Poly p1 = d(p, 1), p2 = d(p, 2), p3 = d(p, 3), p4 = d(p, 4);
  switch (s) {
    case 3:
      return {{2, p * p1}};
    case 4:
      return {{2, Rat(3) * p * p}, {3, p * p1 * p1 + p * p * p2}};
    case 5:
      return {{3, Rat(10) * p * p * p1}, {4, p * p1.pow(3) + Rat(4) * p * p * p1 * p2 + p.pow(3) * p3}};
    case 6:
      return {{3, Rat(15) * p.pow(3)},
              {4, Rat(25) * p * p * p1 * p1 + Rat(15) * p.pow(3) * p2},
              {5, p * p1.pow(4) + Rat(11) * p * p * p1 * p1 * p2 + Rat(4) * p.pow(3) * p2 * p2 +
                      Rat(7) * p.pow(3) * p1 * p3 + p.pow(4) * p4}};
    default:
      return {};
  }
}

// Drops zero entries so maps compare structurally.
std::map<int, Poly> nonzero(std::map<int, Poly> m) {
  std::erase_if(m, [](const auto& e) { return e.second.is_zero(); });
  return m;
}

std::vector<MomentPoly> exponential_moments(const Poly& phi, int s_max) {
  return moment_recursion(phi, RatFuncN::n(), MomentPoly(), s_max);
}

// sum_k C(n,k) x^k (1-x)^{n-k} (k/n - x)^s
Rat bernstein_moment_oracle(int n, const Rat& at, int s) {
  Rat sum = 0;
  for (int k = 0; k <= n; ++k)
    sum += Rat(binomial(n, k)) * expasym::pow(at, k) * expasym::pow(1 - at, n - k) *
           expasym::pow(make_rat(k, n) - at, s);
  return sum;
}

// Plain partial sum of the Poisson series; 600 terms is far past the
// point where the terms drop below 2^-256 for n x <= 128.
BigFloat szasz_moment_oracle(int n, const Rat& at, int s) {
  PrecisionScope scope(320);
  const BigFloat nx(Rat(n) * at);
  BigFloat weight = exp(-nx);
  BigFloat sum(0L);
  for (int k = 0; k < 1200; ++k) {
    sum = sum + weight * BigFloat(expasym::pow(make_rat(k, n) - at, s));
    weight = weight * nx / BigFloat(make_rat(k + 1));
  }
  return sum;
}

}  // namespace

TEST_CASE("central moment examples") {
  const auto bern = central_moments(OperatorFamily::bernstein(), 6);
  const Poly phi = x - x * x;
  CHECK(bern[0] == MomentPoly(Rat(1)));
  CHECK(bern[1].is_zero());
  CHECK(bern[2] == MomentPoly::from_x(phi) * RatFuncN::inverse_power(1));
  CHECK(bern[3] == MomentPoly::from_x(phi * Poly{1, -2}) * RatFuncN::inverse_power(2));
  const auto sz = central_moments(OperatorFamily::szasz(), 4);
  CHECK(sz[4] == MomentPoly::term(Rat(3) * RatFuncN::inverse_power(2), 2) + MomentPoly::term(RatFuncN::inverse_power(3), 1));
  CHECK(bern.s_max() == 6);
  CHECK(bern.family_id == "bernstein");
}

TEST_CASE("moment recursion with quadratic phi matches the closed forms") {
  // phi = a + b x + c x^2. Both sides have degree <= 5 in each of a, b, c,
  // so agreement on six values per parameter proves them for all quadratics.
  for (int a = -2; a <= 3; ++a)
    for (int b = -2; b <= 3; ++b)
      for (int c = -2; c <= 3; ++c) {
        const Poly phi{Rat(a), Rat(b), Rat(c)};
        if (phi.is_zero()) continue;
        const auto mu = exponential_moments(phi, 6);
        for (int s = 3; s <= 6; ++s) CHECK(nonzero(moment_expansion(mu[s], 8)) == nonzero(instance(s, phi)));
      }
}

TEST_CASE("closed forms of mu_3..mu_6 also hold for phi of higher degree") {
  testgen::Gen gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly phi = gen.nonzero_poly(5);
    const auto mu = exponential_moments(phi, 6);
    for (int s = 3; s <= 6; ++s) CHECK(nonzero(moment_expansion(mu[s], 8)) == nonzero(instance(s, phi)));
  }
}

TEST_CASE("the n^-4 coefficient of mu_6 carries 25 phi^2 phi'^2") {
  const Poly phi = x - x * x;
  const auto mu6 = central_moments(OperatorFamily::bernstein(), 6)[6];
  const Poly g = moment_expansion(mu6, 6).at(4);
  const Poly p1 = phi.derivative();
  CHECK(g == Rat(25) * phi * phi * p1 * p1 + Rat(15) * phi.pow(3) * phi.derivative(2));
  CHECK(g != phi * phi * p1 * p1 + Rat(15) * phi.pow(3) * phi.derivative(2));
  for (int n : {8, 16})
    for (const Rat& at : {make_rat(1, 4), make_rat(1, 2)}) {
      const Number direct = central_moment_direct(OperatorFamily::bernstein(), n, at, 6);
      REQUIRE(direct.is_exact());
      CHECK(direct.exact() == mu6(Rat(n), at));
      CHECK(direct.exact() == bernstein_moment_oracle(n, at, 6));
    }
}

TEST_CASE("moment expansion examples") {
  CHECK(moment_expansion(MomentPoly(), 3).empty());
  CHECK(moment_expansion(MomentPoly(Rat(1)), 3) == std::map<int, Poly>{{0, Poly{1}}});
  const auto mu4 = central_moments(OperatorFamily::bernstein(), 4)[4];
  const auto parts = moment_expansion(mu4, 2);
  CHECK(parts.size() == 1);  // truncated at n^-2
}

TEST_CASE("leading term closed forms") {
  const Poly phi = Poly{Rat(1), Rat(2), Rat(-3)};
  CHECK(leading_term_closed_form(6, phi) == Rat(15) * phi.pow(3));
  CHECK(leading_term_closed_form(5, phi) == Rat(10) * phi * phi * phi.derivative());
  CHECK(leading_term_closed_form(3, phi) == phi * phi.derivative());
  CHECK(leading_term_closed_form(0, phi) == Poly{1});
  CHECK(leading_term_closed_form(1, phi).is_zero());
  CHECK(leading_term_closed_form(2, phi) == phi);
}

TEST_CASE("dominant coefficient equals the closed form up to order 16") {
  for (const auto& family : {OperatorFamily::bernstein(), OperatorFamily::szasz(), OperatorFamily::baskakov()}) {
    const auto table = central_moments(family, 16);
    for (int s = 2; s <= 16; ++s) {
      const int j = (s + 1) / 2;
      CHECK(moment_expansion(table[s], j).at(j) == leading_term_closed_form(s, family.phi()));
    }
  }
}

TEST_CASE("vanishing order") {
  const auto bern = central_moments(OperatorFamily::bernstein(), 6);
  CHECK(vanishing_order(bern[4]) == 2);
  CHECK(vanishing_order(bern[2]) == 1);
  CHECK(vanishing_order(bern[6]) == 3);
  CHECK(vanishing_order(bern[0]) == 0);
  CHECK_THROWS_AS(vanishing_order(bern[1]), Error);
  try {
    vanishing_order(bern[1]);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroMoment);
  }
  for (const auto& family : {OperatorFamily::bernstein(), OperatorFamily::szasz(), OperatorFamily::baskakov()}) {
    const auto table = central_moments(family, 12);
    for (int s = 2; s <= 12; ++s) CHECK(vanishing_order(table[s]) == (s + 1) / 2);
  }
  const auto synthetic = central_moments(OperatorFamily::synthetic(), 8);
  for (int s = 0; s <= 8; ++s) CHECK(vanishing_order(synthetic[s]) == (s + 1) / 2);
}

TEST_CASE("Gauss-Weierstrass moments are the Gaussian ones") {
  const auto gw = central_moments(OperatorFamily::gauss_weierstrass(), 8);
  for (int s = 1; s <= 8; s += 2) CHECK(gw[s].is_zero());
  CHECK(gw[4] == MomentPoly(Rat(3) * RatFuncN::inverse_power(2)));
  CHECK(gw[8] == MomentPoly(Rat(105) * RatFuncN::inverse_power(4)));
}

TEST_CASE("synthetic family keeps its first moment") {
  const auto family = OperatorFamily::synthetic();
  const auto table = central_moments(family, 3);
  CHECK(table[1] == family.mu1());
  CHECK(table[1] == MomentPoly::from_x(Poly{1, -2}) * RatFuncN(Poly{make_rat(1, 2)}, Poly{1, 1}));
  // mu_2 from the recursion: mu_1^2 + phi/(n+1) (1 + mu_1')
  const MomentPoly phi = MomentPoly::from_x(x - x * x);
  const RatFuncN inv(Poly{1}, Poly{1, 1});
  CHECK(table[2] == table[1] * table[1] + phi * inv * (MomentPoly(Rat(1)) + table[1].dx()));
}

TEST_CASE("raw moments") {
  const auto bern = central_moments(OperatorFamily::bernstein(), 3);
  CHECK(raw_moment(bern, 2) == MomentPoly::from_x(x * x) + MomentPoly::from_x(x - x * x) * RatFuncN::inverse_power(1));
  CHECK(raw_moment(bern, 0) == MomentPoly(Rat(1)));
  CHECK(raw_moment(bern, 1) == MomentPoly::from_x(x));
  CHECK_THROWS_AS(raw_moment(bern, 4), Error);
  const auto sz = central_moments(OperatorFamily::szasz(), 3);
  // S_n e_3 = x^3 + 3x^2/n + x/n^2
  CHECK(raw_moment(sz, 3)(Rat(10), Rat(1)) == make_rat(131, 100));
}

TEST_CASE("symbolic moments agree with direct Bernstein sums") {
  const auto table = central_moments(OperatorFamily::bernstein(), 8);
  for (int s = 0; s <= 8; ++s)
    for (int n = 2; n <= 32; ++n)
      for (const Rat& at : {Rat(0), make_rat(1, 4), make_rat(1, 3), make_rat(1, 2), Rat(1)}) {
        const Rat symbolic = table[s](Rat(n), at);
        CHECK(symbolic == bernstein_moment_oracle(n, at, s));
      }
  const Number direct = central_moment_direct(OperatorFamily::bernstein(), 8, make_rat(1, 3), 5);
  CHECK(direct.exact() == table[5](Rat(8), make_rat(1, 3)));
}

TEST_CASE("symbolic Szasz moments agree with a plain Poisson sum") {
  const auto table = central_moments(OperatorFamily::szasz(), 6);
  PrecisionScope scope(256);
  for (int s = 0; s <= 6; ++s)
    for (int n : {8, 32})
      for (const Rat& at : {make_rat(1, 2), Rat(1)}) {
        const BigFloat oracle = szasz_moment_oracle(n, at, s);
        const BigFloat symbolic(table[s](Rat(n), at));
        CHECK(abs(oracle - symbolic) < BigFloat::parse("1e-60"));
      }
}

TEST_CASE("invalid families are rejected") {
  CHECK_THROWS_AS(OperatorFamily::from_name("nope"), Error);
  Interval unit{Rat(0), Rat(1)};
  // phi vanishes inside (0, 1)
  CHECK_THROWS_AS(OperatorFamily::custom("bad", unit, Poly{make_rat(-1, 2), Rat(1)}, RatFuncN::n(), MomentPoly()), Error);
  // phi of degree 3
  CHECK_THROWS_AS(OperatorFamily::custom("bad", unit, Poly{1, 0, 0, 1}, RatFuncN::n(), MomentPoly()), Error);
  // lambda_n / n must have a positive limit
  CHECK_THROWS_AS(OperatorFamily::custom("bad", unit, Poly{1}, RatFuncN(Poly{1}), MomentPoly()), Error);
  CHECK_THROWS_AS(OperatorFamily::custom("bad", unit, Poly{1}, -RatFuncN::n(), MomentPoly()), Error);
  CHECK_NOTHROW(OperatorFamily::custom("ok", unit, Poly{0, 1, -1}, RatFuncN(Poly{1, 2}), MomentPoly()));
  try {
    OperatorFamily::custom("bad", unit, Poly{}, RatFuncN::n(), MomentPoly());
    FAIL("zero phi accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidFamily);
  }
}
