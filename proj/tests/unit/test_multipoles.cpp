#include <numbers>

#include "helpers.hpp"

using namespace majorana;
using std::numbers::pi;

namespace {

// T_Kq built from the floating-point Racah sum.
Eigen::MatrixXcd oracle_tensor(int two_s, int K, int q) {
  const int n = two_s + 1;
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const int row = k + q;
    if (row < 0 || row >= n) continue;
    const int two_m = 2 * k - two_s;
    t(row, k) = std::sqrt((2.0 * K + 1) / n) * testing::racah_double(two_s, two_m, 2 * K, 2 * q, two_s, two_m + 2 * q);
  }
  return t;
}

}  // namespace

TEST_CASE("tensor operators: monopole, orthonormality, dipole ~ Sz") {
  for (int two_s = 1; two_s <= 10; ++two_s) {
    const SpinLabel l(two_s);
    const int n = l.dimension();
    CHECK((tensor_operator(l, 0, 0) - Eigen::MatrixXcd::Identity(n, n) / std::sqrt(n)).norm() < 1e-14);
    for (int K = 0; K <= two_s; ++K) {
      for (int q = -K; q <= K; ++q) {
        const Eigen::MatrixXcd t = tensor_operator(l, K, q);
        CHECK((t - oracle_tensor(two_s, K, q)).norm() < 1e-11);
        CHECK(std::abs((t * t.adjoint()).trace() - 1.0) < 1e-12);
        if (K > 0) CHECK(std::abs((t * tensor_operator(l, K - 1, std::clamp(q, -(K - 1), K - 1)).adjoint()).trace()) < 1e-12);
      }
    }
    const Eigen::MatrixXcd t10 = tensor_operator(l, 1, 0);
    const Eigen::MatrixXcd sz = spin_matrices(l).sz;
    const cplx ratio = t10(0, 0) / sz(0, 0);
    CHECK((t10 - ratio * sz).norm() < 1e-13);
  }
  CHECK_THROWS_AS(tensor_operator(SpinLabel(2), 3, 0), RangeError);
  CHECK_THROWS_AS(tensor_operator(SpinLabel(2), 1, 2), RangeError);
}

TEST_CASE("spectrum matches the trace with oracle tensors") {
  majorana::Rng rng = make_stream(41, 0);
  for (int two_s = 1; two_s <= 8; ++two_s) {
    const SpinState psi = random_state(SpinLabel(two_s), rng);
    const Eigen::MatrixXcd rho = psi.vector() * psi.vector().adjoint();
    const MultipoleSpectrum spec = multipoles(psi);
    for (int K = 0; K <= two_s; ++K)
      for (int q = -K; q <= K; ++q) {
        const cplx expected = (rho * oracle_tensor(two_s, K, q).adjoint()).trace();
        CHECK(std::abs(spec.rho(K, q) - expected) < 1e-12);
        CHECK(std::abs(spec.rho(K, -q) - (q % 2 ? -1.0 : 1.0) * std::conj(spec.rho(K, q))) < 1e-13);
      }
    double total = 0.0;
    for (double w : spec.lengths()) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spec.lengths()[0] == doctest::Approx(1.0 / (two_s + 1)).epsilon(1e-12));
    CHECK(cumulative_quantumness(spec, two_s) == doctest::Approx(two_s / (two_s + 1.0)).epsilon(1e-12));
    for (int M = 2; M <= two_s; ++M) CHECK(spec.cumulative()[M - 1] >= spec.cumulative()[M - 2]);
  }
}

TEST_CASE("purity identity for a mixture") {
  majorana::Rng rng = make_stream(42, 0);
  const SpinLabel l(5);
  const Eigen::VectorXcd a = random_state(l, rng).vector(), b = random_state(l, rng).vector();
  const Eigen::MatrixXcd rho = 0.3 * a * a.adjoint() + 0.7 * b * b.adjoint();
  const MultipoleSpectrum spec = multipoles(l, rho);
  double total = 0.0;
  for (double w : spec.lengths()) total += w;
  CHECK(std::abs(total - (rho * rho).trace().real()) < 1e-12);
}

TEST_CASE("maximally mixed state has no K >= 1 multipoles") {
  const SpinLabel l(6);
  const MultipoleSpectrum spec = multipoles(l, Eigen::MatrixXcd::Identity(7, 7) / 7.0);
  for (int K = 1; K <= 6; ++K) CHECK(spec.lengths()[K] < 1e-30);
}

TEST_CASE("|1,0> has no dipole") {
  const SpinState s = basis_state(SpinLabel(2), 0);
  const MultipoleSpectrum spec = multipoles(s);
  CHECK(spec.lengths()[1] < 1e-30);
  CHECK(spec.lengths()[2] > 0.1);
  CHECK(cumulative_quantumness(s, 1) < 1e-30);
  CHECK_THROWS_AS(cumulative_quantumness(s, 3), RangeError);
  CHECK_THROWS_AS(cumulative_quantumness(s, 0), RangeError);
}

TEST_CASE("coherent states maximize A_M") {
  for (int two_s = 1; two_s <= 12; ++two_s) {
    const SpinLabel l(two_s);
    const MultipoleSpectrum coh = multipoles(coherent_state(l, cplx(0.4, 0.2)));
    majorana::Rng rng = make_stream(43, static_cast<std::uint64_t>(two_s));
    for (int trial = 0; trial < 50; ++trial) {
      const MultipoleSpectrum r = multipoles(random_state(l, rng));
      for (int M = 1; M <= two_s; ++M) CHECK(r.cumulative()[M - 1] <= coh.cumulative()[M - 1] + 1e-12);
    }
  }
}

TEST_CASE("lengths are rotation invariant") {
  majorana::Rng rng = make_stream(44, 0);
  const SpinState psi = random_state(SpinLabel(9), rng);
  const auto w0 = multipoles(psi).lengths();
  const auto w1 = multipoles(rotate(psi, 2.1, 0.3)).lengths();
  for (std::size_t K = 0; K < w0.size(); ++K) CHECK(std::abs(w0[K] - w1[K]) < 1e-12);
}

TEST_CASE("husimi examples") {
  const SpinState coh = coherent_state(SpinLabel(4), SpherePoint(1.2, 2.5));
  CHECK(husimi_q(coh, SpherePoint(1.2, 2.5)) == doctest::Approx(1.0).epsilon(1e-14));
  // NOON S=1: stars at +-i, Q vanishes at their conjugates -+i: theta = pi/2, phi = pi/2 or 3pi/2.
  const SpinState noon = noon_state(SpinLabel(2));
  CHECK(husimi_q(noon, SpherePoint(pi / 2, pi / 2)) < 1e-30);
  CHECK(husimi_q(noon, SpherePoint(pi / 2, 3 * pi / 2)) < 1e-30);
  CHECK(husimi_q(noon, SpherePoint(pi / 2, 0.0)) == doctest::Approx(0.5));
  const SpinState up = basis_state(SpinLabel(1), 1);
  for (double theta : {0.0, 0.3, 1.7, pi}) {
    CHECK(husimi_q(up, SpherePoint(theta, 0.4)) == doctest::Approx(std::pow(std::sin(theta / 2), 2)));
  }
}

TEST_CASE("husimi equals the stellar-function expression") {
  majorana::Rng rng = make_stream(45, 0);
  const SpinState psi = random_state(SpinLabel(5), rng);
  const StellarPolynomial f = stellar_polynomial(psi);
  for (int i = 0; i < 50; ++i) {
    const SpherePoint p = random_sphere_point(rng);
    const cplx z = sphere_to_stereo(p).value();
    const double expected = std::norm(f(std::conj(z))) / std::pow(1.0 + std::norm(z), 5);
    CHECK(husimi_q(psi, p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(husimi_q(psi, p) == doctest::Approx(std::norm(overlap(coherent_state(SpinLabel(5), p), psi))).epsilon(1e-12));
  }
}

TEST_CASE("Q vanishes at the conjugated stars") {
  majorana::Rng rng = make_stream(46, 0);
  const SpinState psi = random_state(SpinLabel(6), rng);
  const Constellation c = constellation_from_state(psi);
  for (const cplx& z : c.finite_roots()) {
    CHECK(husimi_q(psi, stereo_to_sphere(std::conj(z))) < 1e-24);
  }
}

TEST_CASE("grid minima sit at the conjugated stars") {
  majorana::Rng rng = make_stream(47, 0);
  const SpinState psi = random_state(SpinLabel(3), rng);
  const int nt = 90, np = 180;
  const QGrid g = q_grid(psi, nt, np);
  std::vector<Vec3> targets;
  for (const ExtendedComplex& z : constellation_from_state(psi).stars()) {
    targets.push_back(stereo_to_unit_vector(z.is_infinite() ? z : ExtendedComplex(std::conj(z.value()))));
  }
  const double resolution = 2.0 * pi / np * 3.0;
  for (int i = 1; i + 1 < nt; ++i) {
    for (int j = 0; j < np; ++j) {
      const double v = g.values(i, j);
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (g.values(i + di, (j + dj + np) % np) < v) local_min = false;
        }
      if (!local_min) continue;
      const Vec3 here = SpherePoint(g.theta_nodes[i], g.phi_nodes[j]).unit_vector();
      double nearest = 10.0;
      for (const Vec3& t : targets) nearest = std::min(nearest, chordal_distance(here, t));
      CHECK(nearest < resolution);
    }
  }
}

TEST_CASE("q grid normalization and validation") {
  majorana::Rng rng = make_stream(48, 0);
  for (int two_s = 1; two_s <= 8; ++two_s) {
    const QGrid g = q_grid(random_state(SpinLabel(two_s), rng), two_s + 2, 2 * two_s + 1);
    CHECK(g.normalization() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(g.values.minCoeff() >= -1e-14);
  }
  const QGrid c = q_grid(coherent_state(SpinLabel(4), SpherePoint(0.0, 0.0)), 64, 8);
  // Peak sits at the pole, which is not a node; the first node row is highest.
  CHECK(c.values.maxCoeff() == doctest::Approx(std::pow(std::cos(0.5 * c.theta_nodes[0]), 8)).epsilon(1e-13));
  CHECK_THROWS_AS(q_grid(noon_state(SpinLabel(2)), 1, 4), RangeError);
  CHECK_THROWS_AS(q_grid(noon_state(SpinLabel(2)), 4, 1), RangeError);
}

TEST_CASE("NOON S=3 grid has six equatorial zeros") {
  const QGrid g = q_grid(noon_state(SpinLabel(6)), 8, 12 * 16);
  // With phi spacing pi/96, zeros of 1 + conj(z)^6 at phi = (2j+1) pi/6 land on nodes.
  int zeros = 0;
  for (int j = 0; j < 12 * 16; ++j) {
    if (husimi_q(noon_state(SpinLabel(6)), SpherePoint(pi / 2, g.phi_nodes[j])) < 1e-28) ++zeros;
  }
  CHECK(zeros == 6);
}

TEST_CASE("dipole and quadrupole") {
  const Vec3 d0 = dipole(basis_state(SpinLabel(2), 0));
  for (double x : d0) CHECK(std::abs(x) < 1e-14);
  for (int two_s = 1; two_s <= 8; ++two_s) {
    const double S = 0.5 * two_s;
    for (int two_m = -two_s; two_m <= two_s; two_m += 2) {
      // Beta-integral oracle: Q ~ u^{S+m} (1-u)^{S-m}, cos(theta) = 1 - 2u.
      const double a = S + 0.5 * two_m, b = S - 0.5 * two_m;
      const double mean_u = (a + 1) / (a + b + 2);
      CHECK(dipole(basis_state(SpinLabel(two_s), two_m))[2] == doctest::Approx(1.0 - 2.0 * mean_u).epsilon(1e-12));
      CHECK(1.0 - 2.0 * mean_u == doctest::Approx(-0.5 * two_m / (S + 1)));
    }
  }
  const Eigen::Matrix3d q = quadrupole(noon_state(SpinLabel(2)));
  CHECK(std::abs(q.trace()) < 1e-12);
  CHECK(std::abs(q(0, 1)) + std::abs(q(0, 2)) + std::abs(q(1, 2)) < 1e-12);
  // Averaging Q = (1 + cos^2 theta)/4 + ... over phi gives <3 cos^2 - 1> = 1/5: the pole-to-pole
  // cat state is prolate along z.
  CHECK(q(2, 2) == doctest::Approx(0.2).epsilon(1e-12));
  // Quadrature oracle at high resolution.
  const QGrid g = q_grid(noon_state(SpinLabel(2)), 40, 40);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 40; ++j) {
      const double ct = std::cos(g.theta_nodes[i]);
      num += g.theta_weights[i] * g.values(i, j) * (3 * ct * ct - 1);
      den += g.theta_weights[i] * g.values(i, j);
    }
  CHECK(q(2, 2) == doctest::Approx(num / den).epsilon(1e-12));
}

TEST_CASE("integral-form multipoles agree with the trace form") {
  majorana::Rng rng = make_stream(49, 0);
  for (int two_s = 1; two_s <= 12; ++two_s) {
    const SpinState psi = random_state(SpinLabel(two_s), rng);
    const MultipoleSpectrum spec = multipoles(psi);
    const auto integral = integral_multipoles(psi);
    for (int K = 0; K <= two_s; ++K)
      for (int q = -K; q <= K; ++q) CHECK(std::abs(integral[K][q + K] - spec.rho(K, q)) < 1e-9);
  }
}
