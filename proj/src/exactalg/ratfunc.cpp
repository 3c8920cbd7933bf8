#include "expasym/exactalg/ratfunc.hpp"

#include "expasym/error.hpp"

namespace expasym {

RatFuncN::RatFuncN(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::DenominatorZero, "exactalg", "rational function with zero denominator");
  normalize();
}

RatFuncN RatFuncN::n() { return RatFuncN(Poly::identity()); }

RatFuncN RatFuncN::inverse_power(int k) {
  if (k >= 0) return RatFuncN(Poly::constant(1), Poly::monomial(1, k));
  return RatFuncN(Poly::monomial(1, -k));
}

void RatFuncN::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rat lead = den_.leading();
  if (lead != 1) {
    const Rat inv = Rat(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rat RatFuncN::operator()(const Rat& n) const {
  const Rat d = den_(n);
  if (d == 0) throw Error(ErrorKind::DenominatorZero, "exactalg", "evaluation at a pole n = " + expasym::to_string(n));
  return num_(n) / d;
}

RatFuncN& RatFuncN::operator+=(const RatFuncN& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFuncN& RatFuncN::operator-=(const RatFuncN& o) { return *this += -o; }

RatFuncN& RatFuncN::operator*=(const RatFuncN& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFuncN& RatFuncN::operator/=(const RatFuncN& o) {
  if (o.is_zero()) throw Error(ErrorKind::DenominatorZero, "exactalg", "division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFuncN RatFuncN::operator-() const {
  RatFuncN r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

bool is_single_term(const Poly& p) {
  int nonzero = 0;
  for (const auto& c : p.coefficients())
    if (c != 0) ++nonzero;
  return nonzero <= 1;
}

}  // namespace

std::string RatFuncN::to_string() const {
  std::string num = num_.to_string("n");
  if (den_ == Poly::constant(1)) return num;
  if (!is_single_term(num_) || num.find('/') != std::string::npos) num = "(" + num + ")";
  std::string den = den_.to_string("n");
  if (!is_single_term(den_)) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace expasym
