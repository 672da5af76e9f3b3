#include "ptoep/quadrature.hpp"

#include <cmath>

namespace ptoep {

QuadRule gauss_legendre(int k) {
  if (k < 2 || k > 512) {
    throw std::invalid_argument("gauss_legendre expects 2 <= k <= 512");
  }
  QuadRule rule;
  rule.domain = QuadDomain::kUnitInterval;
  rule.nodes.resize(static_cast<size_t>(k));
  rule.weights.resize(static_cast<size_t>(k));

  const int half = (k + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root of P_k on (-1,1)
    double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(k) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double pj = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = pj;
      }
      dp = static_cast<double>(k) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map (-1,1) -> (0,1); x descending puts the small node first
    rule.nodes[static_cast<size_t>(i)] = (1.0 - x) / 2.0;
    rule.nodes[static_cast<size_t>(k - 1 - i)] = (1.0 + x) / 2.0;
    rule.weights[static_cast<size_t>(i)] = w / 2.0;
    rule.weights[static_cast<size_t>(k - 1 - i)] = w / 2.0;
  }
  return rule;
}

QuadRule half_line_rule(int k) {
  const QuadRule base = gauss_legendre(k);
  QuadRule rule;
  rule.domain = QuadDomain::kHalfLineS;
  rule.nodes.resize(static_cast<size_t>(k));
  rule.weights.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double u = base.nodes[static_cast<size_t>(i)];
    const double om = 1.0 - u;
    rule.nodes[static_cast<size_t>(i)] = u / om;
    rule.weights[static_cast<size_t>(i)] = base.weights[static_cast<size_t>(i)] / (om * om);
  }
  return rule;
}

QuadRule angular_rule(int k) {
  if (k < 2) throw std::invalid_argument("angular_rule expects k >= 2");
  QuadRule rule;
  rule.domain = QuadDomain::kAngle;
  rule.nodes.resize(static_cast<size_t>(k));
  rule.weights.resize(static_cast<size_t>(k));
  const double step = kTwoPi / static_cast<double>(k);
  for (int j = 0; j < k; ++j) {
    rule.nodes[static_cast<size_t>(j)] = step * static_cast<double>(j);
    rule.weights[static_cast<size_t>(j)] = step;
  }
  return rule;
}

}  // namespace ptoep
