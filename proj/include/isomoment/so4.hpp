#ifndef ISOMOMENT_SO4_HPP
#define ISOMOMENT_SO4_HPP

#include "isomoment/rng.hpp"
#include "isomoment/sphere.hpp"

#include <array>

namespace isomoment {

// A 2-form on R^4 by its six components in the fixed basis order
//   J12, J13, J14, J23, J24, J34.
// Samples drawn from the simple-unit-2-vector orbit satisfy |J|^2 = 1 and
// Pf(J) = 0 to 1e-12.
struct Bivector6 {
  std::array<double, 6> c{};

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  double norm_sq() const;
  std::vector<double> to_vector() const { return {c.begin(), c.end()}; }
};

// Component indices in the fixed basis order.
enum : int { kJ12 = 0, kJ13 = 1, kJ14 = 2, kJ23 = 3, kJ24 = 4, kJ34 = 5 };

/// Pf(v) = J12 J34 - J13 J24 + J14 J23.  Sign convention: positive on
/// e1^e2 + e3^e4.
double pfaffian(const Bivector6& v);

// Uniform sample from the orbit of simple unit 2-vectors: wedge of an
// orthonormal pair built from two Gaussian 4-vectors by Gram-Schmidt
// (near-collinear second draws, threshold 1e-8, are resampled from the same
// stream).  The Gaussian construction makes the law invariant under the
// rotation action.
Bivector6 sample_orbit(CounterRng& rng);

/// Monte Carlo mean of J12 * J34 over the orbit; the exact value is 0.
MCEstimate mc_orthogonality(std::int64_t n_samples, std::uint64_t seed);

/// Monte Carlo mean of <v,J>^{2m} over the orbit, v a unit 6-vector in the
/// fixed basis order.  For m == 1 the exact value is 1/6 for every unit v.
MCEstimate mc_orbit_hypothesis(int m, const UnitVector& v,
                               std::int64_t n_samples, std::uint64_t seed);

/// A unit direction on the Pf = 0 hypersurface (an orbit sample reused as a
/// direction vector).
UnitVector sample_pf_zero_direction(CounterRng& rng);

}  // namespace isomoment

#endif
