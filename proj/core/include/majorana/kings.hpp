#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "majorana/stellar.hpp"

namespace majorana {

struct SearchConfig {
  int M = 1;
  int restarts = 16;
  std::uint64_t seed = 0;
  int max_iters = 2000;
  double grad_tol = 1e-10;
  double f_tol = 1e-9;
  // Random constellations screened per restart before local refinement.
  int screening = 16;
  // Threshold for reporting unpolarized_order.
  double zero_tol = 1e-7;
  // 0 uses MAJORANA_NUM_THREADS or the hardware concurrency.
  int threads = 0;
};

struct KingResult {
  Constellation constellation;
  int M = 1;
  double objective = 0.0;
  int unpolarized_order = 0;
  int restarts_converged = 0;
  std::vector<double> history;
  bool converged = false;
};

// A_M of the state whose stars are the constellation. Throws RangeError
// unless 1 <= M <= 2S.
double objective(const Constellation& constellation, int M);

// Same objective over the flat angle list (theta_1, phi_1, theta_2, ...).
double angle_objective(SpinLabel label, std::span<const double> angles, int M);

// Rotates so one star sits at the north pole and another at phi = 0; among
// all such choices, the one with the lexicographically smallest sorted angle
// list wins. Stars are returned pivot first, second pivot next, rest sorted.
Constellation gauge_fix(const Constellation& constellation);

// Multi-start minimization of A_M over star angles. Deterministic for a given
// config regardless of thread count.
KingResult minimize(SpinLabel label, const SearchConfig& config);

// Largest M whose minimum is <= zero_tol, searching upward from M = 1.
// Results of every attempted order are appended to `runs` when given.
int max_unpolarized_order(SpinLabel label, const SearchConfig& config, double zero_tol = 1e-7,
                          std::vector<KingResult>* runs = nullptr);

// Threads used for restarts: MAJORANA_NUM_THREADS if set, else hardware.
int default_thread_count();

}  // namespace majorana
