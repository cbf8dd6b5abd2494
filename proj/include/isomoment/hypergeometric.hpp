#ifndef ISOMOMENT_HYPERGEOMETRIC_HPP
#define ISOMOMENT_HYPERGEOMETRIC_HPP

#include "isomoment/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace isomoment {

/// Rising factorial (x)_k = x (x+1) ... (x+k-1); empty product is 1.
BigRational pochhammer(const BigRational& x, int k);

/// Parameters of a generalized hypergeometric series pFq(a; b; z).
struct PfqParams {
  std::vector<BigRational> upper;
  std::vector<BigRational> lower;
  double z = 0.0;

  /// True when some upper parameter is a non-positive integer, so the
  /// series is a polynomial.
  bool terminates() const;
};

/// Series ran past max_terms without meeting the stop rule.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_sum,
                   double last_term, int terms_used)
      : std::runtime_error(what),
        partial_sum(partial_sum),
        last_term(last_term),
        terms_used(terms_used) {}

  double partial_sum;
  double last_term;
  int terms_used;
};

// Evaluates sum_k prod_i (a_i)_k / prod_j (b_j)_k * z^k / k!.
//
// Series coefficients are carried as exact rationals via the term recurrence
// and rounded only when a term is assembled; the extended-precision
// accumulation is the only floating-point part.  Stops once the term
// magnitude falls below
// rel_tol * |partial sum| for two consecutive terms (a single small term can
// be a fluke of alternating signs), or exactly when a zero upper-parameter
// factor terminates the series.
//
// Throws std::domain_error for a non-positive-integer lower parameter or a
// non-terminating series outside its convergence region (p == q+1 needs
// |z| < 1; p > q+1 diverges), ConvergenceError past max_terms.
double pfq(const PfqParams& params, double rel_tol = 1e-12,
           int max_terms = 10000);

/// Convenience: pfq with terms_used reported through the pointer when
/// non-null.
double pfq(const PfqParams& params, double rel_tol, int max_terms,
           int* terms_used);

struct Check2F1Result {
  double lhs = 0.0;  // 2F1(2m, n-1; m + n/2; 1/2)
  double rhs = 0.0;  // I_{m,n}
  bool pass = false;
};

/// Verifies I_{m,n} = 2F1(2m, n-1; m + n/2; 1/2) numerically;
/// pass iff |lhs - rhs| <= rel_tol * |rhs|.
Check2F1Result check_2f1_identity(int m, int n, double rel_tol = 1e-10);

}  // namespace isomoment

#endif
