#include "isomoment/rational.hpp"

#include <stdexcept>

namespace isomoment {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  // Division normalizes; the two-argument constructor rejects negative
  // denominators outright.
  return BigRational(num) / BigRational(den);
}

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i) after division
  }
  return r;
}

BigRational rational_pow(const BigRational& q, int e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return 1 / rational_pow(q, -e);
  }
  BigRational r = 1;
  BigRational base = q;
  for (int b = e; b > 0; b >>= 1) {
    if (b & 1) r *= base;
    if (b > 1) base *= base;
  }
  return r;
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

std::string to_string(const BigRational& q) { return q.str(); }

BigRational rational_from_string(const std::string& s) {
  try {
    return BigRational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

}  // namespace isomoment
