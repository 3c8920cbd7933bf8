#include "expasym/operators/family.hpp"

#include "expasym/error.hpp"

namespace expasym {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidFamily, "operators", what); }

int sign_of(const Rat& v) { return sgn(v); }

// Sign of p at a bound; an infinite bound gives the sign at -inf / +inf.
int sign_at(const Poly& p, const std::optional<Rat>& bound, bool upper) {
  if (bound) return sign_of(p(*bound));
  const int lead = sign_of(p.leading());
  return (upper || p.degree() % 2 == 0) ? lead : -lead;
}

bool strictly_inside(const Rat& r, const Interval& iv) {
  return (!iv.lower || r > *iv.lower) && (!iv.upper || r < *iv.upper);
}

std::optional<Rat> rational_sqrt(const Rat& v) {
  if (v < 0) return std::nullopt;
  const BigInt& num = v.get_num();
  const BigInt& den = v.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  BigInt sn;
  BigInt sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rat root(sn, sd);
  root.canonicalize();
  return root;
}

}  // namespace

bool Interval::contains(const Rat& x) const {
  if (lower && (lower_closed ? x < *lower : x <= *lower)) return false;
  if (upper && (upper_closed ? x > *upper : x >= *upper)) return false;
  return true;
}

bool Interval::interior(const Rat& x) const { return strictly_inside(x, *this); }

std::string Interval::to_string() const {
  std::string out = lower ? (lower_closed ? "[" : "(") + expasym::to_string(*lower) : "(-inf";
  out += ", ";
  out += upper ? expasym::to_string(*upper) + (upper_closed ? "]" : ")") : "inf)";
  return out;
}

bool has_zero_in_open_interval(const Poly& p, const Interval& iv) {
  if (p.is_zero()) return true;
  if (p.degree() > 2) invalid("characteristic polynomial must have degree at most 2");
  if (p.degree() == 0) return false;
  if (p.degree() == 1) return strictly_inside(-p.coefficient(0) / p.coefficient(1), iv);
  const Rat a = p.coefficient(2);
  const Rat b = p.coefficient(1);
  const Rat c = p.coefficient(0);
  const Rat disc = b * b - 4 * a * c;
  if (disc < 0) return false;
  if (auto root = rational_sqrt(disc)) {
    const Rat r1 = (-b - *root) / (2 * a);
    const Rat r2 = (-b + *root) / (2 * a);
    return strictly_inside(r1, iv) || strictly_inside(r2, iv);
  }
  // Irrational roots never coincide with a rational bound.
  const int lo = sign_at(p, iv.lower, false);
  const int hi = sign_at(p, iv.upper, true);
  if (lo != hi) return true;
  const Rat vertex = -b / (2 * a);
  return lo == sign_of(a) && strictly_inside(vertex, iv);
}

OperatorFamily::OperatorFamily(FamilyId id, std::string name, Interval interval, Poly phi, RatFuncN lambda,
                               MomentPoly mu1)
    : id_(id),
      name_(std::move(name)),
      interval_(std::move(interval)),
      phi_(std::move(phi)),
      lambda_(std::move(lambda)),
      mu1_(std::move(mu1)) {
  if (phi_.is_zero()) invalid(name_ + ": phi must be nonzero");
  if (phi_.degree() > 2) invalid(name_ + ": phi must have degree at most 2");
  if (has_zero_in_open_interval(phi_, interval_)) invalid(name_ + ": phi vanishes inside " + interval_.to_string());
  const Poly& num = lambda_.numerator();
  const Poly& den = lambda_.denominator();
  if (num.is_zero() || num.degree() != den.degree() + 1 || num.leading() / den.leading() <= 0)
    invalid(name_ + ": lambda_n / n must tend to a finite positive limit");
}

OperatorFamily OperatorFamily::custom(std::string name, Interval interval, Poly phi, RatFuncN lambda, MomentPoly mu1) {
  return OperatorFamily(FamilyId::custom, std::move(name), std::move(interval), std::move(phi), std::move(lambda),
                        std::move(mu1));
}

OperatorFamily OperatorFamily::bernstein() {
  return OperatorFamily(FamilyId::bernstein, "bernstein", Interval{Rat(0), Rat(1), true, true}, Poly{0, 1, -1},
                        RatFuncN::n(), MomentPoly());
}

OperatorFamily OperatorFamily::szasz() {
  return OperatorFamily(FamilyId::szasz, "szasz", Interval{Rat(0), std::nullopt, true, false}, Poly{0, 1},
                        RatFuncN::n(), MomentPoly());
}

OperatorFamily OperatorFamily::baskakov() {
  return OperatorFamily(FamilyId::baskakov, "baskakov", Interval{Rat(0), std::nullopt, true, false}, Poly{0, 1, 1},
                        RatFuncN::n(), MomentPoly());
}

OperatorFamily OperatorFamily::gauss_weierstrass() {
  return OperatorFamily(FamilyId::gauss_weierstrass, "gauss_weierstrass",
                        Interval{std::nullopt, std::nullopt, false, false}, Poly{1}, RatFuncN::n(), MomentPoly());
}

OperatorFamily OperatorFamily::synthetic() {
  const Poly phi{0, 1, -1};
  const RatFuncN shifted(Poly{1, 1});
  MomentPoly mu1 = MomentPoly::from_x(phi.derivative() * make_rat(1, 2)) * (RatFuncN(Rat(1)) / shifted);
  return OperatorFamily(FamilyId::custom, "synthetic", Interval{Rat(0), Rat(1), true, true}, phi, shifted,
                        std::move(mu1));
}

OperatorFamily OperatorFamily::from_name(std::string_view name) {
  if (name == "bernstein") return bernstein();
  if (name == "szasz") return szasz();
  if (name == "baskakov") return baskakov();
  if (name == "gauss_weierstrass") return gauss_weierstrass();
  if (name == "synthetic") return synthetic();
  throw Error(ErrorKind::InvalidArgument, "operators", "unknown family '" + std::string(name) + "'");
}

bool OperatorFamily::has_unit_index() const { return lambda_ == RatFuncN::n(); }

std::string OperatorFamily::key() const {
  return name_ + "|" + phi_.to_string() + "|" + lambda_.to_string() + "|" + mu1_.to_string();
}

}  // namespace expasym
