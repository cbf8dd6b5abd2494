#ifndef ISOMOMENT_SPHERE_HPP
#define ISOMOMENT_SPHERE_HPP

#include "isomoment/pi_scaled.hpp"
#include "isomoment/rng.hpp"

#include <vector>

namespace isomoment {

/// Direction vector with |v|^2 = 1 within 1e-12, any dimension >= 1.
class UnitVector {
 public:
  explicit UnitVector(std::vector<double> components);

  /// Scales the input to unit length (throws on a zero vector).
  static UnitVector normalized(std::vector<double> components);

  int dim() const { return static_cast<int>(components_.size()); }
  double operator[](int i) const {
    return components_[static_cast<std::size_t>(i)];
  }
  const std::vector<double>& components() const { return components_; }

 private:
  std::vector<double> components_;
};

// The model space S^{n-1} with the coordinate functions J_j as the moment
// functions.  Rotational symmetry makes the projected moment
// int <v,J>^{2m} the same for every unit v, so the exact closed forms below
// realize the abstract moment constants; the quadrature and Monte Carlo
// routines then verify them by independent numerical routes.

/// Volume of S^{n-1}: 2 pi^{n/2} / Gamma(n/2), exact.  n >= 1.
PiScaled sphere_volume(int n);

/// int_{S^{n-1}} J_n^{2m} = 2 pi^{(n-1)/2} Gamma(m+1/2) / Gamma(m+n/2),
/// exact, via the slice reduction to a Beta integral.  n >= 2.
PiScaled axis_moment(int n, int m);

// Same axis moment by quadrature of the slice-volume integrand
// x^{2m} (1-x^2)^{(n-3)/2} over [-1, 1] times vol(S^{n-2}).  The x = sin t
// substitution turns the integrand into sin^{2m} t cos^{n-2} t, removing the
// endpoint singularity at n == 2 and any special-casing with it.
double quad_axis_moment(int n, int m, double tol);

/// Uniform point on S^{n-1}: n Gaussians, normalized.  The (measure-zero)
/// zero draw is resampled from the same stream.
UnitVector sample_sphere(int n, CounterRng& rng);

/// Monte Carlo estimate of int <v,x>^{2m} over uniform x on S^{n-1}, with
/// the normalized measure; the expected value is 1/I_{m,n} for every unit v.
MCEstimate mc_projected_moment(int n, int m, const UnitVector& v,
                               std::int64_t n_samples, std::uint64_t seed);

}  // namespace isomoment

#endif
