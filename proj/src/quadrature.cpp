#include "isomoment/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace isomoment {

namespace {

constexpr int kPanelOrder = 32;
constexpr long kNodeBudget = 1L << 20;

GaussLegendreRule compute_rule(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev estimate of the i-th root, then Newton on P_order.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order < 1");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (tol <= 0) throw std::invalid_argument("integrate: tol must be positive");
  const GaussLegendreRule& rule = gauss_legendre(kPanelOrder);
  double prev = 0.0;
  bool have_prev = false;
  for (long panels = 1; panels * kPanelOrder <= kNodeBudget; panels *= 2) {
    const double h = (b - a) / static_cast<double>(panels);
    double total = 0.0;
    for (long p = 0; p < panels; ++p) {
      const double mid = a + (p + 0.5) * h;
      double acc = 0.0;
      for (int i = 0; i < kPanelOrder; ++i)
        acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
      total += 0.5 * h * acc;
    }
    if (have_prev && std::abs(total - prev) < tol) return total;
    prev = total;
    have_prev = true;
  }
  throw QuadratureError("integrate: node budget exhausted before convergence",
                        prev);
}

}  // namespace isomoment
