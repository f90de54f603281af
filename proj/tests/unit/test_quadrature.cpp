#include <numbers>

#include "helpers.hpp"

using namespace majorana;
using std::numbers::pi;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  for (int n = 1; n <= 30; ++n) {
    const GaussLegendre g = gauss_legendre(n);
    CHECK(std::is_sorted(g.nodes.begin(), g.nodes.end()));
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += g.weights[static_cast<std::size_t>(i)] * std::pow(g.nodes[static_cast<std::size_t>(i)], deg);
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(std::abs(sum - exact) < 1e-13);
    }
  }
}

TEST_CASE("sphere rule integrates the area and band-limited monomials") {
  const SphereQuadrature q = sphere_quadrature(6, 11);
  double area = 0.0, z2 = 0.0, x2y2 = 0.0;
  for (std::size_t i = 0; i < q.theta.size(); ++i) {
    for (std::size_t j = 0; j < q.phi.size(); ++j) {
      const Vec3 n = SpherePoint(q.theta[i], q.phi[j]).unit_vector();
      area += q.weight(i, j);
      z2 += q.weight(i, j) * n[2] * n[2];
      x2y2 += q.weight(i, j) * n[0] * n[0] * n[1] * n[1];
    }
  }
  CHECK(area == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK(z2 == doctest::Approx(4 * pi / 3).epsilon(1e-14));
  CHECK(x2y2 == doctest::Approx(4 * pi / 15).epsilon(1e-13));
}
