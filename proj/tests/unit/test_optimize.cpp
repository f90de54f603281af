#include "helpers.hpp"

using namespace majorana;

namespace {

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) s += 100 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1 - x[i], 2);
  return s;
}

}  // namespace

TEST_CASE("nelder-mead finds a quadratic minimum") {
  const Objective f = [](std::span<const double> x) { return std::pow(x[0] - 1.0, 2) + 3 * std::pow(x[1] + 2.0, 2); };
  const OptimizeResult r = nelder_mead(f, {0.0, 0.0});
  CHECK(r.value < 1e-12);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("bfgs solves rosenbrock") {
  const OptimizeResult r = bfgs(rosenbrock, {-1.2, 1.0, 0.5, -0.3}, {.max_iterations = 2000, .grad_tol = 1e-8});
  CHECK(r.value < 1e-12);
  for (double x : r.x) CHECK(x == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("central gradient") {
  const Objective f = [](std::span<const double> x) { return std::sin(x[0]) * x[1]; };
  const auto g = central_gradient(f, std::vector<double>{0.3, 2.0}, 1e-6);
  CHECK(g[0] == doctest::Approx(std::cos(0.3) * 2.0).epsilon(1e-9));
  CHECK(g[1] == doctest::Approx(std::sin(0.3)).epsilon(1e-9));
}

TEST_CASE("bfgs never returns a worse point than it started from") {
  const Objective f = [](std::span<const double> x) { return std::abs(x[0]) + x[1] * x[1]; };
  const std::vector<double> x0{0.7, -0.2};
  const OptimizeResult r = bfgs(f, x0);
  CHECK(r.value <= f(x0));
}
