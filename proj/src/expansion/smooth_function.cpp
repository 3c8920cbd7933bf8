#include "expasym/expansion/smooth_function.hpp"

#include <cmath>
#include <vector>

#include "expasym/error.hpp"

namespace expasym {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  throw Error(ErrorKind::ParseError, "expansion", "bad function spec '" + std::string(spec) + "': " + why);
}

}  // namespace

SmoothFunction SmoothFunction::polynomial(Poly p) { return {std::move(p), Base::one, 0, 0, kUnlimited}; }

SmoothFunction SmoothFunction::exponential(Rat a) { return {Poly{1}, Base::exponential, std::move(a), 0, kUnlimited}; }

SmoothFunction SmoothFunction::sinusoid(Rat a, Rat b) {
  return {Poly{1}, Base::sinusoid, std::move(a), std::move(b), kUnlimited};
}

SmoothFunction SmoothFunction::monomial(int k) { return polynomial(Poly::monomial(1, k)); }

SmoothFunction SmoothFunction::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) bad_spec(spec, "expected 'kind:args'");
  const auto kind = spec.substr(0, colon);
  const auto args = split(spec.substr(colon + 1), ',');
  std::vector<Rat> values;
  try {
    for (auto a : args) values.push_back(parse_rat(a));
  } catch (const Error& e) {
    bad_spec(spec, e.what());
  }
  if (kind == "poly") return polynomial(Poly(values));
  if (kind == "exp") {
    if (values.size() != 1) bad_spec(spec, "exp takes one rate");
    return exponential(values[0]);
  }
  if (kind == "sin") {
    if (values.size() != 2) bad_spec(spec, "sin takes a rate and a phase");
    return sinusoid(values[0], values[1]);
  }
  bad_spec(spec, "unknown kind '" + std::string(kind) + "'");
}

SmoothFunction SmoothFunction::with_derivative_cap(int cap) const {
  SmoothFunction f = *this;
  f.cap_ = cap;
  return f;
}

void SmoothFunction::require_derivatives(int order) const {
  if (order > cap_)
    throw Error(ErrorKind::DerivativeCapExceeded, "expansion",
                "derivative of order " + std::to_string(order) + " requested, cap is " + std::to_string(cap_));
}

SmoothFunction SmoothFunction::times(const Poly& q) const {
  SmoothFunction f = *this;
  f.factor_ = factor_ * q;
  return f;
}

Rat SmoothFunction::derivative_exact(int k, const Rat& t) const {
  if (!is_polynomial()) throw Error(ErrorKind::NotExact, "expansion", describe() + " has no exact rational values");
  require_derivatives(k);
  return factor_.derivative(k)(t);
}

Poly SmoothFunction::derivative_poly(int k) const {
  if (!is_polynomial()) throw Error(ErrorKind::NotExact, "expansion", describe() + " is not a polynomial");
  require_derivatives(k);
  return factor_.derivative(k);
}

BigFloat SmoothFunction::base_derivative(int k, const BigFloat& t) const {
  const unsigned bits = t.precision();
  switch (base_) {
    case Base::one:
      return BigFloat(k == 0 ? 1L : 0L, bits);
    case Base::exponential: {
      const BigFloat a(a_, bits);
      return pow(a, k) * exp(a * t);
    }
    case Base::sinusoid: {
      const BigFloat a(a_, bits);
      const BigFloat arg = a * t + BigFloat(b_, bits);
      const BigFloat scale = pow(a, k);
      switch (k % 4) {
        case 0: return scale * sin(arg);
        case 1: return scale * cos(arg);
        case 2: return -(scale * sin(arg));
        default: return -(scale * cos(arg));
      }
    }
  }
  return BigFloat(0L, bits);
}

BigFloat SmoothFunction::derivative(int k, const BigFloat& t) const {
  require_derivatives(k);
  const unsigned bits = t.precision();
  if (is_polynomial()) return evaluate(factor_.derivative(k), t);
  // Leibniz over the polynomial factor and the transcendental base.
  BigFloat acc(0L, bits);
  Poly dp = factor_;
  for (int j = 0; j <= k && !dp.is_zero(); ++j) {
    const BigFloat weight(Rat(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j))), bits);
    acc += weight * evaluate(dp, t) * base_derivative(k - j, t);
    dp = dp.derivative();
  }
  return acc;
}

Number SmoothFunction::derivative_at(int k, const Rat& t) const {
  if (is_polynomial()) return Number(derivative_exact(k, t));
  return Number(derivative(k, BigFloat(t)));
}

bool SmoothFunction::admissible_on(const Interval& interval) const {
  if (base_ != Base::exponential || a_ == 0 || factor_.is_zero()) return true;
  if (a_ > 0 && !interval.upper) return false;
  if (a_ < 0 && !interval.lower) return false;
  return true;
}

SmoothFunction::Majorant SmoothFunction::majorant_nonnegative() const {
  double scale = 0;
  for (const auto& c : factor_.coefficients()) scale += std::fabs(c.get_d());
  if (base_ == Base::exponential && a_ > 0) scale = HUGE_VAL;
  return {scale, std::max(factor_.degree(), 0)};
}

std::string SmoothFunction::describe() const {
  std::string base;
  switch (base_) {
    case Base::one: return factor_.to_string("t");
    case Base::exponential: base = "exp(" + to_string(a_) + "*t)"; break;
    case Base::sinusoid: base = "sin(" + to_string(a_) + "*t + " + to_string(b_) + ")"; break;
  }
  if (factor_ == Poly{1}) return base;
  return "(" + factor_.to_string("t") + ")*" + base;
}

std::string SmoothFunction::spec() const {
  switch (base_) {
    case Base::one: {
      std::string out = "poly:";
      const auto& c = factor_.coefficients();
      if (c.empty()) return out + "0";
      for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + to_string(c[i]);
      return out;
    }
    case Base::exponential: return "exp:" + to_string(a_);
    case Base::sinusoid: return "sin:" + to_string(a_) + "," + to_string(b_);
  }
  return {};
}

}  // namespace expasym
