#include "majorana/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "majorana/errors.hpp"

namespace majorana {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw RangeError("Gauss-Legendre needs at least one node");
  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    // Refresh the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

SphereQuadrature sphere_quadrature(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw RangeError("sphere quadrature needs positive grid sizes");
  const GaussLegendre gl = gauss_legendre(n_theta);
  SphereQuadrature q;
  // Descending cos(theta) gives ascending theta.
  for (int i = n_theta - 1; i >= 0; --i) {
    q.theta.push_back(std::acos(gl.nodes[static_cast<std::size_t>(i)]));
    q.theta_weights.push_back(gl.weights[static_cast<std::size_t>(i)]);
  }
  q.phi_weight = 2.0 * std::numbers::pi / n_phi;
  for (int j = 0; j < n_phi; ++j) q.phi.push_back(q.phi_weight * j);
  return q;
}

}  // namespace majorana
