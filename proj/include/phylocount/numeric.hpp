#pragma once

// Exact integer/rational helpers shared by every module. BigInt and Rational
// are GMP's C++ wrappers; all counting code works in these types.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace phylocount {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(long n);

/// n!! for n >= -1, with (-1)!! = 1. Throws for n < -1; use
/// double_factorial_ext for negative odd arguments.
BigInt double_factorial(long n);

/// Double factorial continued to negative odd n via n!! = (n+2)!!/(n+2),
/// so (-1)!! = 1, (-3)!! = -1, (-5)!! = 1/3. Even negative n is undefined.
Rational double_factorial_ext(long n);

BigInt binomial(long n, long k);

/// Generalized binomial coefficient binom(top, n) for rational top.
Rational binomial(const Rational& top, long n);

BigInt pow2(long n);

/// Rational power of two; negative exponents allowed.
Rational pow2_q(long n);

/// num/den in canonical form. gmpxx's two-argument constructor does not
/// canonicalize, and GMP arithmetic requires canonical operands.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// True when q has denominator 1.
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Returns the numerator of q, throwing std::domain_error if q is not an
/// integer. `what` names the quantity in the error message.
BigInt require_integral(const Rational& q, const std::string& what);

/// Natural log of a positive big integer, accurate to double precision.
double log_abs(const BigInt& x);
double log_abs(const Rational& x);

/// A positive real stored through its natural log, with a decimal
/// mantissa/exponent rendering (1 <= mantissa < 10).
struct LogValue {
  double log_value = 0;
  double mantissa = 0;
  long exponent = 0;

  static LogValue from_log(double log_value);
};

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace phylocount
