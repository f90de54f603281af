#pragma once

#include <utility>
#include <vector>

#include "majorana/hamiltonian.hpp"
#include "majorana/stellar.hpp"

namespace majorana {

// Velocities dz_k/dt of the stellar-function roots, in the
// order of constellation.finite_roots(). Throws DegenerateConstellation if a
// star is at infinity or two stars are closer than collision_tol (chordal).
std::vector<cplx> star_velocities(const Constellation& constellation, const Hamiltonian& h,
                                  double collision_tol = 1e-12);
std::vector<cplx> star_velocities(std::span<const cplx> roots, const Hamiltonian& h);

// exp(-i H t) psi.
SpinState evolve_exact(const SpinState& state, const Hamiltonian& h, double t);

// max_k |dz_k/dt|. Coincident stars are treated as one multiple star moving
// rigidly when the flow keeps them together (infinite residual otherwise).
// Throws DegenerateConstellation for stars at infinity.
double equilibrium_residual(const Constellation& constellation, const Hamiltonian& h);

struct EvolveOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  // <= 0 selects 0.01 / ||H||_2.
  double dt_max = 0.0;
  // Snapshot times; empty selects a uniform grid of spacing dt_max.
  std::vector<double> output_times;
  // The exact-evolution bridge starts below enter_distance and ends above
  // exit_distance (pairwise chordal distance).
  double enter_distance = 1e-6;
  double exit_distance = 1e-3;
  // Stars beyond this modulus in the working frame trigger a change of frame.
  double reframe_radius = 4.0;
  RootOptions roots;
};

struct StarTrajectory {
  std::vector<double> times;
  std::vector<Constellation> snapshots;
  // Star lists in tracked order (finite or infinite), aligned with snapshots.
  std::vector<std::vector<ExtendedComplex>> tracks;
  std::vector<bool> fallback;
  std::vector<std::pair<double, double>> fallback_intervals;
  int steps_accepted = 0;
  int steps_rejected = 0;
  int reframes = 0;
};

// Integrates the star equations with an embedded Dormand-Prince 5(4) pair.
// Stars are integrated in a rotated frame that keeps them away from infinity;
// collisions are bridged by exact evolution plus re-rooting.
StarTrajectory evolve(const SpinState& state, const Hamiltonian& h, double t_final,
                      const EvolveOptions& options = {});

}  // namespace majorana
