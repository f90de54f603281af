#include "majorana/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace majorana {

std::vector<double> central_gradient(const Objective& f, std::span<const double> x, double h) {
  std::vector<double> work(x.begin(), x.end());
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = work[i];
    work[i] = xi + h;
    const double fp = f(work);
    work[i] = xi - h;
    const double fm = f(work);
    work[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  int iterations = 0;
  bool converged = false;
  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];
    if (values[worst] - values[best] <= options.value_spread) {
      converged = true;
      break;
    }
    ++iterations;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d] / static_cast<double>(n);
    }
    auto along = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t d = 0; d < n; ++d) x[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
      return x;
    };

    std::vector<double> reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      std::vector<double> expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = std::move(reflected);
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      std::vector<double> contracted = along(outside ? -0.5 : 0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = std::move(contracted);
        values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t d = 0; d < n; ++d) {
            simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
          }
          values[i] = eval(simplex[i]);
        }
      }
    }
  }
  const auto best_it = std::min_element(values.begin(), values.end());
  OptimizeResult r;
  r.x = simplex[static_cast<std::size_t>(best_it - values.begin())];
  r.value = *best_it;
  r.iterations = iterations;
  r.evaluations = evals;
  r.converged = converged;
  return r;
}

OptimizeResult bfgs(const Objective& f, std::vector<double> x0, const BfgsOptions& options) {
  const auto n = static_cast<Eigen::Index>(x0.size());
  const Objective& line_f = options.line_objective ? options.line_objective : f;
  Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(x0.data(), n);
  auto as_span = [](const Eigen::VectorXd& v) { return std::span<const double>(v.data(), static_cast<std::size_t>(v.size())); };
  auto grad = [&](const Eigen::VectorXd& v) {
    const std::vector<double> g = central_gradient(f, as_span(v), options.fd_step);
    return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(g.data(), n));
  };

  OptimizeResult r;
  double fx = f(as_span(x));
  Eigen::VectorXd g = grad(x);
  r.evaluations = 1 + 2 * static_cast<int>(n);
  Eigen::MatrixXd inv_h = Eigen::MatrixXd::Identity(n, n);
  bool fresh = true;

  for (int it = 0; it < options.max_iterations; ++it) {
    r.iterations = it;
    if (g.norm() <= options.grad_tol || fx <= options.value_floor) {
      r.converged = true;
      break;
    }
    Eigen::VectorXd dir = -inv_h * g;
    double slope = g.dot(dir);
    if (!(slope < 0.0)) {
      inv_h.setIdentity();
      dir = -g;
      slope = -g.squaredNorm();
      fresh = true;
    }
    const double f_line0 = line_f(as_span(x));
    double step = 1.0;
    bool accepted = false;
    Eigen::VectorXd x_new;
    for (int bt = 0; bt < 60; ++bt) {
      x_new = x + step * dir;
      ++r.evaluations;
      const double trial = line_f(as_span(x_new));
      if (std::isfinite(trial) && trial <= f_line0 + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (fresh) break;
      inv_h.setIdentity();
      fresh = true;
      continue;
    }
    const double f_new = f(as_span(x_new));
    const Eigen::VectorXd g_new = grad(x_new);
    r.evaluations += 1 + 2 * static_cast<int>(n);
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      if (fresh) {
        // Scale the initial inverse Hessian to the observed curvature.
        inv_h *= sy / y.squaredNorm();
      }
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
      inv_h = (eye - rho * s * y.transpose()) * inv_h * (eye - rho * y * s.transpose()) +
              rho * s * s.transpose();
      fresh = false;
    }
    x = x_new;
    fx = f_new;
    g = g_new;
  }
  r.x.assign(x.data(), x.data() + n);
  r.value = fx;
  r.gradient_norm = g.norm();
  if (r.gradient_norm <= options.grad_tol || fx <= options.value_floor) r.converged = true;
  return r;
}

}  // namespace majorana
