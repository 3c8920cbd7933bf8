#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace expasym {

/// Arbitrary-precision rational. GMP keeps mpq_class values canonical
/// (reduced, positive denominator, zero as 0/1) as long as every value is
/// produced by arithmetic or by make_rat/parse_rat.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(long num, long den = 1);

/// Accepts "p", "-p", "p/q" and finite decimals such as "0.25".
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// n (n-1) ... (n-k+1)
BigInt falling_factorial(unsigned long n, unsigned long k);

Rat pow(const Rat& base, unsigned long exponent);

}  // namespace expasym
