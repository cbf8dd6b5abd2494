#ifndef ISOMOMENT_VORTEX_HPP
#define ISOMOMENT_VORTEX_HPP

#include "isomoment/hypergeometric.hpp"
#include "isomoment/rational.hpp"

#include <stdexcept>
#include <string>

namespace isomoment {

// Parameters of the N-vortex gas on a sphere of squared radius R2 with
// interaction coupling mu2, temperature T and quantum scale hbar.  The
// squared radius must exceed the vortex number; the effective area
// a_tilde = 4*pi*(R2 - N) is then positive.
struct VortexParams {
  int N;
  double R2;
  double mu2;
  double T;
  double hbar;

  VortexParams(int n, double r2, double mu2_in, double t, double hbar_in);

  double a_tilde() const;
};

// Exact coefficient representation of a moment of J3 over the N-vortex
// moduli space: the integral of J3^{2m} equals coeff * a_tilde^power with
// power = N + 2m.  Keeping the area factored out leaves an exact rational,
// so the heavy cancellation among the alternating terms costs no precision.
struct DHMomentCoeff {
  BigRational coeff;
  int power = 0;
};

/// coeff = (2m)!/(N+2m)! * sum_{j=0}^{N} (-1)^{N-j} (j-N/2)^{N+2m}/(j!(N-j)!).
DHMomentCoeff dh_moment_coeff(int N, int m);

/// Floating-point moment coeff * a_tilde^{N+2m}; throws std::overflow_error
/// rather than returning a non-finite value.
double dh_moment(const VortexParams& params, int m);

/// Exact coefficient of x^m, x = mu2 * a_tilde^2 / T, in the partition-
/// function series: (-1)^m (2m+1)/m! * dh_moment_coeff(N, m).coeff.
BigRational z_series_coeff(int N, int m);

// Partition function Z as the power series in the coupling,
//   (T/2 hbar^2)^N * sum_m (-1)^m mu2^m/(m! T^m) (2m+1) * <J3^{2m}>.
// The terms are exact rationals (the coupling combination mu2*a_tilde^2/T
// enters as the exact value of its double) and the partial sums are kept
// exact, so the strong-coupling regime -- where the partials peak orders of
// magnitude above the limit -- costs no precision.  Truncates when two
// consecutive terms fall below rel_tol relative to the partial sum; throws
// ConvergenceError (with the partial sum attached) if max_m terms do not
// suffice.  terms_used, when non-null, receives the number of terms
// accumulated.  cancellation_flag, when non-null, is set when the converged
// sum is below 1e-6 of the peak partial magnitude -- the regime where naive
// double summation would have lost more than six digits (the returned value
// is still fully accurate).
double z_series(const VortexParams& params, double rel_tol = 1e-10,
                int max_m = 400, int* terms_used = nullptr,
                bool* cancellation_flag = nullptr);

// The same partition function through its 2F2 representation,
//   (1/N!) (a_tilde T/2 hbar^2)^N sum_j (-1)^j/(j!(N-j)!) (N/2-j)^N
//     * 2F2(1, 3/2; (N+1)/2, (N+2)/2; -mu2 a_tilde^2 (N/2-j)^2 / T),
// with the vanishing central j = N/2 term (even N) skipped.  Series errors
// from the 2F2 evaluation propagate.
double z_closed(const VortexParams& params, double rel_tol = 1e-10);

}  // namespace isomoment

#endif
