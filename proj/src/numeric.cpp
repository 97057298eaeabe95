#include "phylocount/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace phylocount {

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
  if (n <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational double_factorial_ext(long n) {
  if (n >= -1) return Rational(double_factorial(n));
  if (n % 2 == 0) throw std::invalid_argument("double_factorial_ext: negative even argument");
  // (m-2)!! = m!! / m, starting from (-1)!! = 1
  Rational r = 1;
  for (long m = -1; m > n; m -= 2) r /= m;
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational binomial(const Rational& top, long n) {
  if (n < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < n; ++i) {
    r *= (top - i);
    r /= (i + 1);
  }
  return r;
}

BigInt pow2(long n) {
  if (n < 0) throw std::invalid_argument("pow2: negative exponent");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return r;
}

Rational pow2_q(long n) {
  if (n >= 0) return Rational(pow2(n));
  return make_rational(1, pow2(-n));
}

BigInt require_integral(const Rational& q, const std::string& what) {
  if (!is_integral(q))
    throw std::domain_error(what + " is not an integer: " + q.get_str());
  return q.get_num();
}

double log_abs(const BigInt& x) {
  if (x == 0) return -INFINITY;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& x) {
  return log_abs(BigInt(x.get_num())) - log_abs(BigInt(x.get_den()));
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

LogValue LogValue::from_log(double log_value) {
  LogValue v;
  v.log_value = log_value;
  const double log10v = log_value / std::log(10.0);
  v.exponent = static_cast<long>(std::floor(log10v));
  v.mantissa = std::pow(10.0, log10v - static_cast<double>(v.exponent));
  return v;
}

}  // namespace phylocount
