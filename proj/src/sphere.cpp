#include "isomoment/sphere.hpp"

#include "isomoment/exact.hpp"
#include "isomoment/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace isomoment {

namespace {

constexpr double kUnitNormTol = 1e-12;

double ipow(double x, int e) {
  double r = 1.0;
  for (int b = e; b > 0; b >>= 1) {
    if (b & 1) r *= x;
    x *= x;
  }
  return r;
}

}  // namespace

UnitVector::UnitVector(std::vector<double> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("UnitVector: empty");
  double norm_sq = 0.0;
  for (double c : components_) norm_sq += c * c;
  if (std::abs(norm_sq - 1.0) > kUnitNormTol)
    throw std::invalid_argument("UnitVector: |v|^2 deviates from 1 by more than 1e-12");
}

UnitVector UnitVector::normalized(std::vector<double> components) {
  double norm_sq = 0.0;
  for (double c : components) norm_sq += c * c;
  if (norm_sq == 0.0)
    throw std::invalid_argument("UnitVector: cannot normalize zero vector");
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& c : components) c *= inv;
  return UnitVector(std::move(components));
}

PiScaled sphere_volume(int n) {
  if (n < 1) throw std::domain_error("sphere_volume: need n >= 1");
  return PiScaled(BigRational(2), n) / gamma_half(HalfInteger{n});
}

PiScaled axis_moment(int n, int m) {
  if (n < 2) throw std::domain_error("axis_moment: need n >= 2");
  if (m < 0) throw std::domain_error("axis_moment: need m >= 0");
  // vol(S^{n-2}) * B(m + 1/2, (n-1)/2)
  return sphere_volume(n - 1) *
         beta_half(HalfInteger{2 * m + 1}, HalfInteger{n - 1});
}

double quad_axis_moment(int n, int m, double tol) {
  if (n < 2) throw std::domain_error("quad_axis_moment: need n >= 2");
  if (m < 0) throw std::domain_error("quad_axis_moment: need m >= 0");
  if (tol <= 0) throw std::domain_error("quad_axis_moment: tol must be positive");
  const double slice = integrate(
      [m, n](double t) {
        return ipow(std::sin(t), 2 * m) * ipow(std::cos(t), n - 2);
      },
      -M_PI / 2, M_PI / 2, tol);
  return slice * sphere_volume(n - 1).to_double();
}

UnitVector sample_sphere(int n, CounterRng& rng) {
  if (n < 1) throw std::domain_error("sample_sphere: need n >= 1");
  std::vector<double> x(static_cast<std::size_t>(n));
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (double& c : x) {
      c = rng.next_gaussian();
      norm_sq += c * c;
    }
  } while (norm_sq == 0.0);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& c : x) c *= inv;
  return UnitVector(std::move(x));
}

MCEstimate mc_projected_moment(int n, int m, const UnitVector& v,
                               std::int64_t n_samples, std::uint64_t seed) {
  if (v.dim() != n)
    throw std::invalid_argument("mc_projected_moment: v has wrong dimension");
  if (m < 0) throw std::domain_error("mc_projected_moment: need m >= 0");
  if (n_samples < 2)
    throw std::domain_error("mc_projected_moment: need n_samples >= 2");
  return mc_mean(n_samples, seed, [&](CounterRng& rng) {
    const UnitVector x = sample_sphere(n, rng);
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += v[i] * x[i];
    return ipow(dot, 2 * m);
  });
}

}  // namespace isomoment
