#include <numbers>

#include "helpers.hpp"

using namespace majorana;
using std::numbers::pi;

namespace {

std::vector<double> grid(double t_final, int n) {
  std::vector<double> t;
  for (int i = 0; i <= n; ++i) t.push_back(t_final * i / n);
  return t;
}

double pair_spread(const Constellation& c) {
  double s = 0.0;
  const auto v = c.unit_vectors();
  for (const Vec3& a : v)
    for (const Vec3& b : v) s = std::max(s, chordal_distance(a, b));
  return s;
}

}  // namespace

TEST_CASE("velocities under Sz are i w0 z") {
  majorana::Rng rng = make_stream(71, 0);
  const SpinState psi = random_state(SpinLabel(6), rng);
  const Constellation c = constellation_from_state(psi);
  const auto v = star_velocities(c, Hamiltonian::builtin(SpinLabel(6), "Sz", 0.7));
  for (std::size_t k = 0; k < v.size(); ++k) CHECK(std::abs(v[k] - cplx(0, 0.7) * c.finite_roots()[k]) < 1e-12);
}

TEST_CASE("Kerr velocities") {
  const double chi = 1.3;
  majorana::Rng rng = make_stream(72, 0);
  for (int two_s = 2; two_s <= 6; ++two_s) {
    const Constellation c = constellation_from_state(random_state(SpinLabel(two_s), rng));
    const auto v = star_velocities(c, Hamiltonian::builtin(SpinLabel(two_s), "Sz2", chi));
    const auto z = c.finite_roots();
    for (std::size_t k = 0; k < z.size(); ++k) {
      cplx sum{};
      for (std::size_t l = 0; l < z.size(); ++l)
        if (l != k) sum += 1.0 / (z[k] - z[l]);
      const cplx expected = cplx(0, chi) * (2.0 * z[k] * z[k] * sum - (two_s - 1.0) * z[k]);
      CHECK(std::abs(v[k] - expected) < 1e-10 * (1 + std::abs(expected)));
    }
  }
}

TEST_CASE("velocities equal the first-order root motion of exact evolution") {
  majorana::Rng rng = make_stream(73, 0);
  const SpinLabel l(5);
  const Hamiltonian h(l, random_hermitian(l.dimension(), rng));
  const SpinState psi = random_state(l, rng);
  const Constellation c0 = constellation_from_state(psi);
  const auto v = star_velocities(c0, h);
  const double dt = 1e-6;
  const auto plus = constellation_from_state(evolve_exact(psi, h, dt)).stars();
  const auto minus = constellation_from_state(evolve_exact(psi, h, -dt)).stars();
  const auto mp = match_stars(c0.stars(), plus);
  const auto mm = match_stars(c0.stars(), minus);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const cplx fd = (mp[k].value() - mm[k].value()) / (2 * dt);
    CHECK(std::abs(fd - v[k]) < 1e-5 * (1 + std::abs(v[k])));
  }
}

TEST_CASE("zero Hamiltonian and degenerate inputs") {
  const SpinLabel l(3);
  const Hamiltonian zero(l, Eigen::MatrixXcd::Zero(4, 4));
  const Constellation c(l, {0.3, cplx(0, 1), -2.0}, 0);
  for (const cplx& v : star_velocities(c, zero)) CHECK(v == cplx{});
  CHECK(equilibrium_residual(c, zero) == 0.0);
  CHECK_THROWS_AS(star_velocities(Constellation(l, {0.3, 0.3, 1.0}, 0), zero), DegenerateConstellation);
  CHECK_THROWS_AS(star_velocities(Constellation(l, {0.3, 1.0}, 1), zero), DegenerateConstellation);
  CHECK_THROWS_AS(equilibrium_residual(Constellation(l, {0.3, 1.0}, 1), zero), DegenerateConstellation);
}

TEST_CASE("equilibrium residual examples") {
  for (int two_s = 1; two_s <= 6; ++two_s) {
    const SpinLabel l(two_s);
    const Hamiltonian h = Hamiltonian::builtin(l, "Sz", 1.0);
    CHECK(equilibrium_residual(constellation_from_state(basis_state(l, two_s)), h) < 1e-10);
  }
  const Hamiltonian h2 = Hamiltonian::builtin(SpinLabel(2), "Sz", 2.5);
  CHECK(equilibrium_residual(constellation_from_state(noon_state(SpinLabel(2))), h2) == doctest::Approx(2.5));
  // A coherent cluster under Sz2 splits immediately.
  const SpinLabel l(4);
  CHECK(std::isinf(equilibrium_residual(constellation_from_state(coherent_state(l, cplx(0.5))),
                                        Hamiltonian::builtin(l, "Sz2", 1.0))));
  // A coherent cluster under Sz moves rigidly.
  CHECK(equilibrium_residual(constellation_from_state(coherent_state(l, cplx(0.5))),
                             Hamiltonian::builtin(l, "Sz", 1.0)) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("exact evolution") {
  majorana::Rng rng = make_stream(74, 0);
  const SpinLabel l(4);
  const Hamiltonian h(l, random_hermitian(l.dimension(), rng));
  const SpinState psi = random_state(l, rng);
  CHECK(fidelity(evolve_exact(psi, h, 0.0), psi) == doctest::Approx(1.0).epsilon(1e-14));
  const SpinState later = evolve_exact(psi, h, 3.0);
  double norm = 0.0;
  for (const cplx& a : later.amplitudes()) norm += std::norm(a);
  CHECK(std::abs(norm - 1.0) < 1e-12);
  CHECK(expectation(later, h.matrix()) == doctest::Approx(expectation(psi, h.matrix())).epsilon(1e-12));
  const Hamiltonian sz = Hamiltonian::builtin(l, "Sz", 0.9);
  const SpinState m = basis_state(l, 2);
  const SpinState mt = evolve_exact(m, sz, 1.4);
  CHECK(std::abs(mt[3] - std::exp(cplx(0, -0.9 * 1.0 * 1.4))) < 1e-14);
}

TEST_CASE("linear Hamiltonian: stars rotate rigidly") {
  majorana::Rng rng = make_stream(75, 0);
  const SpinLabel l(6);
  const SpinState psi = random_state(l, rng);
  const double w0 = 1.3;
  const Hamiltonian h = Hamiltonian::builtin(l, "Sz", w0);
  EvolveOptions o;
  o.output_times = grid(4 * pi / w0, 64);
  const StarTrajectory tr = evolve(psi, h, 4 * pi / w0, o);
  const auto z0 = tr.tracks.front();
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    for (std::size_t k = 0; k < z0.size(); ++k) {
      const cplx expected = z0[k].value() * std::exp(cplx(0, w0 * tr.times[i]));
      CHECK(chordal_distance(ExtendedComplex(expected), tr.tracks[i][k]) < 1e-9);
    }
    const auto v = tr.snapshots[i].unit_vectors();
    const auto v0 = tr.snapshots.front().unit_vectors();
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = 0; b < v.size(); ++b)
        CHECK(std::abs(chordal_distance(v[a], v[b]) - chordal_distance(v0[a], v0[b])) < 1e-9);
  }
  CHECK(tr.fallback_intervals.empty());
}

TEST_CASE("eigenstates are stationary") {
  majorana::Rng rng = make_stream(76, 0);
  const SpinLabel l(5);
  const Hamiltonian h(l, random_hermitian(l.dimension(), rng));
  const SpinState eig = SpinState::from_vector(l, h.eigenvectors().col(2));
  EvolveOptions o;
  o.output_times = grid(1.0, 10);
  const StarTrajectory tr = evolve(eig, h, 1.0, o);
  for (const auto& s : tr.tracks) CHECK(matched_distance(s, tr.tracks.front()) < 1e-8);
}

TEST_CASE("trajectory agrees with exact evolution for random Hamiltonians") {
  for (int two_s = 1; two_s <= 6; ++two_s) {
    const SpinLabel l(two_s);
    for (int trial = 0; trial < 5; ++trial) {
      majorana::Rng rng = make_stream(77, static_cast<std::uint64_t>(100 * two_s + trial));
      const Hamiltonian h(l, random_hermitian(l.dimension(), rng));
      const SpinState psi = random_state(l, rng);
      EvolveOptions o;
      o.output_times = grid(1.0, 10);
      const StarTrajectory tr = evolve(psi, h, 1.0, o);
      REQUIRE(tr.times.size() == 11);
      for (std::size_t i = 0; i < tr.times.size(); ++i) {
        CHECK(tr.snapshots[i].size() == two_s);
        const auto exact = constellation_from_state(evolve_exact(psi, h, tr.times[i])).stars();
        CHECK(matched_distance(tr.tracks[i], exact) < 1e-6);
      }
    }
  }
}

TEST_CASE("stars through the south pole are handled by a change of frame") {
  // |S,m> mixtures under Sx sweep stars across the south pole.
  const SpinLabel l(4);
  const SpinState psi(l, {1.0, 0.0, 0.3, 0.0, 0.2});
  const Hamiltonian h = Hamiltonian::builtin(l, "Sx", 1.0);
  EvolveOptions o;
  o.output_times = grid(3.0, 30);
  const StarTrajectory tr = evolve(psi, h, 3.0, o);
  CHECK(tr.reframes > 0);
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    const auto exact = constellation_from_state(evolve_exact(psi, h, tr.times[i])).stars();
    CHECK(matched_distance(tr.tracks[i], exact) < 1e-6);
  }
}

TEST_CASE("Kerr deforms a coherent constellation") {
  const SpinLabel l(4);
  const SpinState psi = coherent_state(l, SpherePoint(1.1, 0.4));
  const Hamiltonian h = Hamiltonian::builtin(l, "Sz2", 1.0);
  EvolveOptions o;
  o.output_times = grid(0.1, 10);
  const StarTrajectory tr = evolve(psi, h, 0.1, o);
  CHECK(pair_spread(tr.snapshots.front()) < 1e-6);
  for (std::size_t i = 1; i < tr.times.size(); ++i) {
    CHECK(pair_spread(tr.snapshots[i]) > pair_spread(tr.snapshots[i - 1]));
  }
  CHECK(pair_spread(tr.snapshots.back()) > 1e-3);
  // A coherent start is degenerate: a short exact-evolution bridge opens the cluster.
  REQUIRE(tr.fallback_intervals.size() == 1);
  CHECK(tr.fallback_intervals[0].first == 0.0);
  CHECK(tr.fallback_intervals[0].second < 1e-3);
}

TEST_CASE("t = 0 gives the initial constellation") {
  majorana::Rng rng = make_stream(78, 0);
  const SpinState psi = random_state(SpinLabel(3), rng);
  const StarTrajectory tr = evolve(psi, Hamiltonian::builtin(SpinLabel(3), "Sz2", 1.0), 0.0);
  REQUIRE(tr.times.size() == 1);
  CHECK(matched_distance(tr.tracks[0], constellation_from_state(psi).stars()) == 0.0);
  CHECK_THROWS_AS(evolve(psi, Hamiltonian::builtin(SpinLabel(3), "Sz2", 1.0), -1.0), InvalidArgument);
}

TEST_CASE("default snapshot spacing follows dt_max") {
  const SpinLabel l(2);
  const StarTrajectory tr = evolve(noon_state(l), Hamiltonian::builtin(l, "Sz", 2.0), 0.1);
  // ||H|| = 2 so dt_max = 0.005: 21 snapshots.
  CHECK(tr.times.size() == 21);
  CHECK(tr.times.back() == 0.1);
}
