#include "expasym/exactalg/rat.hpp"

#include <cctype>

#include "expasym/error.hpp"

namespace expasym {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorKind::ParseError, "exactalg",
              "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DenominatorZero, "exactalg", "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rat result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    BigInt d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::DenominatorZero, "exactalg", "zero denominator in '" + std::string(text) + "'");
    result = Rat(BigInt(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      bad_rational(text);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    result = Rat(w * scale + f, scale);
  } else {
    if (!all_digits(body)) bad_rational(text);
    result = Rat(BigInt(std::string(body)));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt falling_factorial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= n - i;
  return r;
}

Rat pow(const Rat& base, unsigned long exponent) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // sign and gcd are preserved by powering a canonical fraction
  return r;
}

}  // namespace expasym
