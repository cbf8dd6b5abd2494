#include "isomoment/vortex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isomoment {

VortexParams::VortexParams(int n, double r2, double mu2_in, double t,
                           double hbar_in)
    : N(n), R2(r2), mu2(mu2_in), T(t), hbar(hbar_in) {
  if (N < 1) throw std::invalid_argument("vortex number N must be >= 1");
  if (!(R2 > N)) {
    throw std::invalid_argument("radius condition R^2 > N violated");
  }
  if (!(mu2 >= 0.0)) {
    throw std::invalid_argument("coupling mu2 must be >= 0");
  }
  if (!(T > 0.0)) throw std::invalid_argument("temperature T must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
}

double VortexParams::a_tilde() const { return 4.0 * M_PI * (R2 - N); }

DHMomentCoeff dh_moment_coeff(int N, int m) {
  if (N < 1) throw std::invalid_argument("dh_moment_coeff: N must be >= 1");
  if (m < 0) throw std::invalid_argument("dh_moment_coeff: m must be >= 0");
  const int power = N + 2 * m;
  BigRational sum(0);
  for (int j = 0; j <= N; ++j) {
    BigRational term = rational_pow(make_rational(2 * j - N, 2), power);
    term /= BigRational(factorial(j) * factorial(N - j));
    if ((N - j) % 2 != 0) term = -term;
    sum += term;
  }
  DHMomentCoeff result;
  result.coeff = BigRational(factorial(2 * m)) / BigRational(factorial(power));
  result.coeff *= sum;
  result.power = power;
  return result;
}

double dh_moment(const VortexParams& params, int m) {
  const DHMomentCoeff dc = dh_moment_coeff(params.N, m);
  const double value =
      to_double(dc.coeff) * std::pow(params.a_tilde(), dc.power);
  if (!std::isfinite(value)) {
    throw std::overflow_error("dh_moment: result is not finite");
  }
  return value;
}

BigRational z_series_coeff(int N, int m) {
  BigRational r = dh_moment_coeff(N, m).coeff;
  r *= BigRational(2 * m + 1);
  r /= BigRational(factorial(m));
  if (m % 2 != 0) r = -r;
  return r;
}

double z_series(const VortexParams& params, double rel_tol, int max_m,
                int* terms_used, bool* cancellation_flag) {
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("z_series: rel_tol must be > 0");
  }
  if (max_m < 1) throw std::invalid_argument("z_series: max_m must be >= 1");

  const double a = params.a_tilde();
  const double pref =
      std::pow(a * params.T / (2.0 * params.hbar * params.hbar), params.N);
  if (cancellation_flag != nullptr) *cancellation_flag = false;

  if (params.mu2 == 0.0) {
    // Only the m = 0 term survives: the moduli-space volume a^N/N!.
    if (terms_used != nullptr) *terms_used = 1;
    const double z = pref * to_double(z_series_coeff(params.N, 0));
    if (!std::isfinite(z)) {
      throw std::overflow_error("z_series: result is not finite");
    }
    return z;
  }

  // Exact accumulation: x is the exact rational value of the double it was
  // computed as, so the cancellation among the alternating terms (partials
  // can peak ~1e3 above a ~1e-5 limit at coupling ~5) costs nothing.
  const BigRational x(params.mu2 * a * a / params.T);
  BigRational sum(0);
  BigRational xpow(1);
  double max_abs_partial = 0.0;
  double last_term = 0.0;
  int small_streak = 0;
  int used = 0;

  for (int m = 0; m < max_m; ++m) {
    const BigRational term = z_series_coeff(params.N, m) * xpow;
    sum += term;
    used = m + 1;
    const double sum_d = to_double(sum);
    last_term = to_double(term);
    max_abs_partial = std::max(max_abs_partial, std::abs(sum_d));

    const double scale =
        std::max(std::abs(sum_d), std::numeric_limits<double>::min());
    if (std::abs(last_term) <= rel_tol * scale) {
      if (++small_streak >= 2) break;
    } else {
      small_streak = 0;
    }
    xpow *= x;
  }

  const double sum_d = to_double(sum);
  if (small_streak < 2) {
    throw ConvergenceError("z_series: no convergence within max_m terms",
                           pref * sum_d, pref * last_term, used);
  }
  if (cancellation_flag != nullptr && max_abs_partial > 0.0 &&
      std::abs(sum_d) < 1e-6 * max_abs_partial) {
    *cancellation_flag = true;
  }
  if (terms_used != nullptr) *terms_used = used;
  const double z = pref * sum_d;
  if (!std::isfinite(z)) {
    throw std::overflow_error("z_series: result is not finite");
  }
  return z;
}

double z_closed(const VortexParams& params, double rel_tol) {
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("z_closed: rel_tol must be > 0");
  }
  const int N = params.N;
  const double a = params.a_tilde();
  // The j-sum is exact in its weights; evaluate each 2F2 tighter than the
  // requested overall tolerance.
  const double inner_tol = std::max(rel_tol / 100.0, 1e-15);

  long double sum = 0.0L;
  for (int j = 0; j <= N; ++j) {
    if (2 * j == N) continue;  // central term carries weight (N/2-j)^N = 0
    BigRational weight = rational_pow(make_rational(N - 2 * j, 2), N);
    weight /= BigRational(factorial(j) * factorial(N - j));
    if (j % 2 != 0) weight = -weight;

    const double half_diff = 0.5 * N - j;
    PfqParams f;
    f.upper = {BigRational(1), make_rational(3, 2)};
    f.lower = {make_rational(N + 1, 2), make_rational(N + 2, 2)};
    f.z = -params.mu2 * a * a * half_diff * half_diff / params.T;
    sum += weight.convert_to<long double>() * pfq(f, inner_tol);
  }

  const double pref =
      std::pow(a * params.T / (2.0 * params.hbar * params.hbar), N) /
      to_double(BigRational(factorial(N)));
  const double z = pref * static_cast<double>(sum);
  if (!std::isfinite(z)) {
    throw std::overflow_error("z_closed: result is not finite");
  }
  return z;
}

}  // namespace isomoment
