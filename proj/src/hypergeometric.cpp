#include "isomoment/hypergeometric.hpp"

#include "isomoment/exact.hpp"

#include <cmath>
#include <cstdlib>

namespace isomoment {

BigRational pochhammer(const BigRational& x, int k) {
  if (k < 0) throw std::domain_error("pochhammer: negative k");
  BigRational r = 1;
  BigRational f = x;
  for (int i = 0; i < k; ++i, f += 1) r *= f;
  return r;
}

namespace {

bool is_nonpositive_integer(const BigRational& q) {
  return q <= 0 && denominator(q) == 1;
}

}  // namespace

bool PfqParams::terminates() const {
  for (const BigRational& a : upper)
    if (is_nonpositive_integer(a)) return true;
  return false;
}

double pfq(const PfqParams& params, double rel_tol, int max_terms) {
  return pfq(params, rel_tol, max_terms, nullptr);
}

double pfq(const PfqParams& params, double rel_tol, int max_terms,
           int* terms_used) {
  if (rel_tol <= 0) throw std::domain_error("pfq: rel_tol must be positive");
  if (max_terms < 1) throw std::domain_error("pfq: max_terms must be >= 1");
  for (const BigRational& b : params.lower) {
    if (is_nonpositive_integer(b))
      throw std::domain_error("pfq: lower parameter is a non-positive integer");
  }
  const bool finite_sum = params.terminates();
  const std::size_t p = params.upper.size();
  const std::size_t q = params.lower.size();
  if (!finite_sum && params.z != 0.0) {
    if (p > q + 1)
      throw std::domain_error("pfq: divergent series (p > q+1, non-terminating)");
    if (p == q + 1 && std::abs(params.z) >= 1.0)
      throw std::domain_error("pfq: |z| must be < 1 for p = q+1");
  }

  if (terms_used) *terms_used = 1;
  if (params.z == 0.0) return 1.0;

  // Alternating tails (z < 0) can swing the partial sums orders of magnitude
  // above the limit; extended-precision accumulation keeps the cancellation
  // cheap while the coefficients stay exact.
  BigRational coeff = 1;  // prod (a_i)_k / (prod (b_j)_k k!)
  long double zpow = 1.0L;
  long double sum = 0.0L;
  int small_streak = 0;
  long double term = 0.0L;
  for (int k = 0; k < max_terms; ++k) {
    term = coeff.convert_to<long double>() * zpow;
    sum += term;
    if (terms_used) *terms_used = k + 1;

    BigRational ratio = 1;
    for (const BigRational& a : params.upper) ratio *= a + k;
    if (ratio == 0) return static_cast<double>(sum);  // terminated exactly
    for (const BigRational& b : params.lower) ratio /= b + k;
    ratio /= k + 1;
    coeff *= ratio;
    zpow *= params.z;

    if (std::abs(term) < rel_tol * std::abs(sum)) {
      if (++small_streak >= 2) return static_cast<double>(sum);
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("pfq: no convergence within max_terms",
                         static_cast<double>(sum), static_cast<double>(term),
                         max_terms);
}

Check2F1Result check_2f1_identity(int m, int n, double rel_tol) {
  if (m < 0 || n < 2)
    throw std::domain_error("check_2f1_identity: need m >= 0, n >= 2");
  PfqParams params;
  params.upper = {BigRational(2 * m), BigRational(n - 1)};
  params.lower = {make_rational(2 * m + n, 2)};
  params.z = 0.5;
  Check2F1Result r;
  r.lhs = pfq(params, rel_tol * 1e-2, 10000);
  r.rhs = to_double(i_mn(m, n));
  r.pass = std::abs(r.lhs - r.rhs) <= rel_tol * std::abs(r.rhs);
  return r;
}

}  // namespace isomoment
