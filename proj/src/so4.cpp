#include "isomoment/so4.hpp"

#include <cmath>
#include <stdexcept>

namespace isomoment {

double Bivector6::norm_sq() const {
  double s = 0.0;
  for (double x : c) s += x * x;
  return s;
}

double pfaffian(const Bivector6& v) {
  return v.c[kJ12] * v.c[kJ34] - v.c[kJ13] * v.c[kJ24] +
         v.c[kJ14] * v.c[kJ23];
}

namespace {

std::array<double, 4> gaussian4(CounterRng& rng) {
  return {rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian(),
          rng.next_gaussian()};
}

double dot4(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

}  // namespace

Bivector6 sample_orbit(CounterRng& rng) {
  // First frame vector: normalized Gaussian.
  std::array<double, 4> e1{};
  double n1;
  do {
    e1 = gaussian4(rng);
    n1 = std::sqrt(dot4(e1, e1));
  } while (n1 == 0.0);
  for (double& x : e1) x /= n1;

  // Second frame vector: Gram-Schmidt against e1, redrawn if the residual
  // is too small to normalize reliably.
  std::array<double, 4> e2{};
  for (;;) {
    std::array<double, 4> g = gaussian4(rng);
    const double proj = dot4(g, e1);
    for (int i = 0; i < 4; ++i) e2[i] = g[i] - proj * e1[i];
    const double n2 = std::sqrt(dot4(e2, e2));
    if (n2 > 1e-8) {
      for (double& x : e2) x /= n2;
      break;
    }
  }

  Bivector6 j;
  j.c[kJ12] = e1[0] * e2[1] - e1[1] * e2[0];
  j.c[kJ13] = e1[0] * e2[2] - e1[2] * e2[0];
  j.c[kJ14] = e1[0] * e2[3] - e1[3] * e2[0];
  j.c[kJ23] = e1[1] * e2[2] - e1[2] * e2[1];
  j.c[kJ24] = e1[1] * e2[3] - e1[3] * e2[1];
  j.c[kJ34] = e1[2] * e2[3] - e1[3] * e2[2];
  return j;
}

MCEstimate mc_orthogonality(std::int64_t n_samples, std::uint64_t seed) {
  return mc_mean(n_samples, seed, [](CounterRng& rng) {
    const Bivector6 j = sample_orbit(rng);
    return j.c[kJ12] * j.c[kJ34];
  });
}

MCEstimate mc_orbit_hypothesis(int m, const UnitVector& v,
                               std::int64_t n_samples, std::uint64_t seed) {
  if (m < 0) throw std::invalid_argument("mc_orbit_hypothesis: m must be >= 0");
  if (v.dim() != 6) {
    throw std::invalid_argument(
        "mc_orbit_hypothesis: direction must be a unit 6-vector");
  }
  const std::vector<double>& dir = v.components();
  return mc_mean(n_samples, seed, [m, &dir](CounterRng& rng) {
    const Bivector6 j = sample_orbit(rng);
    double dot = 0.0;
    for (int i = 0; i < 6; ++i) dot += dir[static_cast<std::size_t>(i)] * j.c[static_cast<std::size_t>(i)];
    double p = 1.0;
    for (int k = 0; k < 2 * m; ++k) p *= dot;
    return p;
  });
}

UnitVector sample_pf_zero_direction(CounterRng& rng) {
  const Bivector6 j = sample_orbit(rng);
  // |J| = 1 up to roundoff for orbit samples; renormalize to pass the
  // UnitVector tolerance exactly.
  return UnitVector::normalized(j.to_vector());
}

}  // namespace isomoment
