#pragma once

#include <vector>

namespace majorana {

struct GaussLegendre {
  std::vector<double> nodes;    // ascending in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

// n-point Gauss-Legendre rule, exact for polynomials of degree 2n - 1.
GaussLegendre gauss_legendre(int n);

// Product rule on the sphere: Gauss-Legendre in cos(theta) (theta ascending)
// times the periodic trapezoid rule in phi. Exact for band-limited functions
// of degree < min(2 n_theta, n_phi).
struct SphereQuadrature {
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> theta_weights;  // Gauss weights in cos(theta)
  double phi_weight = 0.0;            // 2 pi / n_phi

  double weight(std::size_t i, std::size_t /*j*/) const { return theta_weights[i] * phi_weight; }
};

SphereQuadrature sphere_quadrature(int n_theta, int n_phi);

}  // namespace majorana
