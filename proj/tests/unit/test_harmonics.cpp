#include <numbers>

#include "helpers.hpp"

using namespace majorana;
using std::numbers::pi;

TEST_CASE("closed forms") {
  const SpherePoint p(0.7, 1.9);
  CHECK(std::abs(spherical_harmonic(0, 0, p) - 1.0 / std::sqrt(4 * pi)) < 1e-15);
  CHECK(std::abs(spherical_harmonic(1, 0, SpherePoint(0.7, 0.0)) - std::sqrt(3 / (4 * pi)) * std::cos(0.7)) < 1e-15);
  const cplx y11 = -std::sqrt(3 / (8 * pi)) * std::sin(0.7) * std::exp(cplx(0, 1.9));
  CHECK(std::abs(spherical_harmonic(1, 1, p) - y11) < 1e-15);
  const cplx y2m2 = 0.25 * std::sqrt(15 / (2 * pi)) * std::pow(std::sin(0.7), 2) * std::exp(cplx(0, -2 * 1.9));
  CHECK(std::abs(spherical_harmonic(2, -2, p) - y2m2) < 1e-15);
  const double y30 = 0.25 * std::sqrt(7 / pi) * (5 * std::pow(std::cos(0.7), 3) - 3 * std::cos(0.7));
  CHECK(std::abs(spherical_harmonic(3, 0, p) - y30) < 1e-14);
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(spherical_harmonic(2, 3, SpherePoint(0.1, 0.1)), RangeError);
  CHECK_THROWS_AS(spherical_harmonic(-1, 0, SpherePoint(0.1, 0.1)), RangeError);
}

TEST_CASE("gram matrix for K <= 8 is the identity") {
  const int L = 8;
  const SphereQuadrature q = sphere_quadrature(L + 2, 2 * L + 2);
  std::vector<std::pair<int, int>> idx;
  for (int K = 0; K <= L; ++K)
    for (int m = -K; m <= K; ++m) idx.emplace_back(K, m);
  std::vector<std::vector<cplx>> values(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t i = 0; i < q.theta.size(); ++i)
      for (std::size_t j = 0; j < q.phi.size(); ++j)
        values[a].push_back(spherical_harmonic(idx[a].first, idx[a].second, SpherePoint(q.theta[i], q.phi[j])));
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a; b < idx.size(); ++b) {
      cplx s{};
      std::size_t n = 0;
      for (std::size_t i = 0; i < q.theta.size(); ++i)
        for (std::size_t j = 0; j < q.phi.size(); ++j, ++n) s += q.weight(i, j) * values[a][n] * std::conj(values[b][n]);
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  CHECK(worst < 1e-11);
}
