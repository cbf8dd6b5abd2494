#ifndef ISOMOMENT_QUADRATURE_HPP
#define ISOMOMENT_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isomoment {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Computed by Newton iteration on the Legendre recurrence; cached per order.
const GaussLegendreRule& gauss_legendre(int order);

/// Refinement hit the node budget before successive estimates agreed.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate(best_estimate) {}

  double best_estimate;
};

// Integrates f over [a, b] with composite fixed-order Gauss-Legendre panels,
// doubling the panel count until two successive estimates differ by less
// than tol.  Node budget 2^20; past it, throws QuadratureError carrying the
// best estimate.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

}  // namespace isomoment

#endif
