#pragma once

#include <functional>
#include <span>
#include <vector>

namespace majorana {

using Objective = std::function<double(std::span<const double>)>;

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

struct NelderMeadOptions {
  double initial_step = 0.3;
  int max_evaluations = 2000;
  // Stop when the simplex value spread falls below this.
  double value_spread = 1e-14;
};

OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options = {});

struct BfgsOptions {
  int max_iterations = 1000;
  double grad_tol = 1e-10;
  // Stop as soon as the objective reaches this value.
  double value_floor = 0.0;
  double fd_step = 1e-6;
  // Optional objective used only while backtracking (e.g. with barrier terms).
  Objective line_objective;
};

// Quasi-Newton with central-difference gradients and backtracking line search.
OptimizeResult bfgs(const Objective& f, std::vector<double> x0, const BfgsOptions& options = {});

std::vector<double> central_gradient(const Objective& f, std::span<const double> x, double h);

}  // namespace majorana
