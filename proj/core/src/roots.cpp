#include "majorana/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "majorana/errors.hpp"
#include "majorana/polynomial.hpp"

namespace majorana {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// |p(z)| and sum_k |a_k| |z|^k, both divided by max(1,|z|)^n so large
// arguments do not overflow.
struct ScaledResidual {
  double residual;
  double magnitude;
  double derivative;  // |p'(z)| / max(1,|z|)^(n-1)
};

ScaledResidual scaled_residual(std::span<const cplx> a, cplx z) {
  const int n = static_cast<int>(a.size()) - 1;
  if (std::abs(z) <= 1.0) {
    const PolyValue v = poly_eval_with_derivative(a, z);
    return {std::abs(v.value), poly_magnitude(a, std::abs(z)), std::abs(v.derivative)};
  }
  const cplx w = 1.0 / z;
  cplx q{};
  cplx dq{};
  double mag = 0.0;
  const double aw = std::abs(w);
  for (int k = 0; k <= n; ++k) {
    dq = dq * w + q;
    q = q * w + a[static_cast<std::size_t>(k)];
    mag = mag * aw + std::abs(a[static_cast<std::size_t>(k)]);
  }
  return {std::abs(q), mag, std::abs(static_cast<double>(n) * q - w * dq)};
}

bool residual_ok(std::span<const cplx> a, cplx z, double tol, double max_coeff) {
  const ScaledResidual r = scaled_residual(a, z);
  return std::isfinite(r.residual) && r.residual <= tol * max_coeff;
}

double fujiwara_bound(std::span<const cplx> a) {
  const int n = static_cast<int>(a.size()) - 1;
  const double lead = std::abs(a[static_cast<std::size_t>(n)]);
  double bound = 0.0;
  for (int j = 1; j <= n; ++j) {
    double ratio = std::abs(a[static_cast<std::size_t>(n - j)]) / lead;
    if (j == n) ratio *= 0.5;
    bound = std::max(bound, std::pow(ratio, 1.0 / j));
  }
  return 2.0 * bound;
}

void polish(std::span<const cplx> a, std::vector<cplx>& roots) {
  for (cplx& z : roots) {
    for (int step = 0; step < 3; ++step) {
      const cplx dz = newton_ratio(a, z);
      if (!std::isfinite(dz.real()) || !std::isfinite(dz.imag())) break;
      const cplx trial = z - dz;
      const ScaledResidual before = scaled_residual(a, z);
      const ScaledResidual after = scaled_residual(a, trial);
      if (!(after.residual < before.residual)) break;
      z = trial;
    }
  }
}

struct Cluster {
  cplx center;
  int multiplicity;
};

// Newton on p^{(m-1)}, which has a simple root at an m-fold root of p.
cplx refine_multiple_root(std::span<const cplx> a, cplx guess, int m) {
  const std::vector<cplx> g = poly_derivative(a, m - 1);
  cplx c = guess;
  for (int it = 0; it < 12; ++it) {
    const cplx dz = newton_ratio(g, c);
    if (!std::isfinite(dz.real()) || !std::isfinite(dz.imag())) break;
    c -= dz;
    if (std::abs(dz) <= 4.0 * kEps * (1.0 + std::abs(c))) break;
  }
  return c;
}

// True when p looks like t_m (z - c)^m + ... near c: every Taylor coefficient
// below order m is negligible against the coefficient-magnitude scale.
bool passes_multiplicity_test(std::span<const cplx> a, cplx c, int m, double eta) {
  const std::vector<cplx> t = poly_taylor(a, c, m);
  std::vector<cplx> abs_a(a.size());
  std::transform(a.begin(), a.end(), abs_a.begin(), [](const cplx& x) { return cplx(std::abs(x)); });
  const std::vector<cplx> s = poly_taylor(abs_a, cplx(std::abs(c)), m);
  for (int j = 0; j < m; ++j) {
    if (!(std::abs(t[static_cast<std::size_t>(j)]) <= eta * s[static_cast<std::size_t>(j)].real())) {
      return false;
    }
  }
  return true;
}

std::vector<Cluster> cluster_roots(std::span<const cplx> a, const std::vector<cplx>& roots,
                                   double radius) {
  const std::size_t n = roots.size();
  std::vector<Cluster> out;
  if (n == 0) return out;

  // Single linkage within the clustering radius.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = 1.0 + std::max(std::abs(roots[i]), std::abs(roots[j]));
      if (std::abs(roots[i] - roots[j]) <= radius * scale) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  std::vector<bool> assigned(n, false);
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    cplx centroid{};
    for (std::size_t i : g) centroid += roots[i];
    centroid /= static_cast<double>(g.size());
    const int m = static_cast<int>(g.size());
    const cplx refined = refine_multiple_root(a, centroid, m);
    const bool use_refined = std::abs(refined - centroid) <= radius * (1.0 + std::abs(centroid));
    out.push_back({use_refined ? refined : centroid, m});
    for (std::size_t i : g) assigned[i] = true;
  }

  // A root perturbed from multiplicity m >= 3 spreads over a ring of radius
  // ~eps^{1/m}, far wider than the linkage radius. Flag roots whose forward
  // error estimate is comparable to the distance to their neighbours and
  // test groups of them for a genuine multiple root.
  std::vector<std::size_t> suspects;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) nearest = std::min(nearest, std::abs(roots[i] - roots[j]));
    }
    const ScaledResidual r = scaled_residual(a, roots[i]);
    const double forward = 8.0 * static_cast<double>(n) * kEps * r.magnitude *
                           std::max(1.0, std::abs(roots[i])) / r.derivative;
    if (!(forward < 1e-4 * nearest)) suspects.push_back(i);
  }
  constexpr double kEta = 1e-11;
  for (std::size_t m = suspects.size(); m >= 3; --m) {
    for (std::size_t idx = 0; idx < suspects.size(); ++idx) {
      const std::size_t i = suspects[idx];
      if (assigned[i]) continue;
      std::vector<std::size_t> pool;
      for (std::size_t j : suspects) {
        if (!assigned[j]) pool.push_back(j);
      }
      if (pool.size() < m) break;
      std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m), pool.end(),
                        [&](std::size_t x, std::size_t y) {
                          return std::abs(roots[x] - roots[i]) < std::abs(roots[y] - roots[i]);
                        });
      pool.resize(m);
      cplx centroid{};
      for (std::size_t j : pool) centroid += roots[j];
      centroid /= static_cast<double>(m);
      const cplx c = refine_multiple_root(a, centroid, static_cast<int>(m));
      if (passes_multiplicity_test(a, c, static_cast<int>(m), kEta)) {
        out.push_back({c, static_cast<int>(m)});
        for (std::size_t j : pool) assigned[j] = true;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!assigned[i]) out.push_back({roots[i], 1});
  }
  return out;
}

}  // namespace

bool aberth_roots(std::span<const cplx> a, std::vector<cplx>& roots, int max_iterations,
                  double residual_tol) {
  const int n = static_cast<int>(a.size()) - 1;
  roots.assign(static_cast<std::size_t>(n), cplx{});
  if (n <= 0) return true;
  const double max_coeff = std::abs(*std::max_element(
      a.begin(), a.end(), [](const cplx& x, const cplx& y) { return std::abs(x) < std::abs(y); }));

  const double radius = fujiwara_bound(a);
  for (int k = 0; k < n; ++k) {
    const double r = radius * (1.0 + 0.01 * k / n);
    roots[static_cast<std::size_t>(k)] = std::polar(r, 2.0 * std::numbers::pi * k / n + 0.4);
  }

  std::vector<bool> done(static_cast<std::size_t>(n), false);
  int remaining = n;
  for (int it = 0; it < max_iterations && remaining > 0; ++it) {
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      cplx& z = roots[static_cast<std::size_t>(i)];
      const ScaledResidual r = scaled_residual(a, z);
      if (r.residual <= 4.0 * n * kEps * r.magnitude) {
        done[static_cast<std::size_t>(i)] = true;
        --remaining;
        continue;
      }
      const cplx ratio = newton_ratio(a, z);
      cplx sum{};
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z - roots[static_cast<std::size_t>(j)]);
      }
      cplx w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        // Stationary point of p or coincident iterates: nudge off it.
        w = cplx(1e-3, 1e-3) * (1.0 + std::abs(z));
      }
      z -= w;
      if (std::abs(w) <= 2.0 * kEps * std::abs(z)) {
        done[static_cast<std::size_t>(i)] = true;
        --remaining;
      }
    }
  }
  return std::all_of(roots.begin(), roots.end(),
                     [&](const cplx& z) { return residual_ok(a, z, residual_tol, max_coeff); });
}

std::vector<cplx> companion_roots(std::span<const cplx> a) {
  const int n = static_cast<int>(a.size()) - 1;
  if (n <= 0) return {};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  const cplx lead = a[static_cast<std::size_t>(n)];
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -a[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(c, false);
  if (eig.info() != Eigen::Success) throw NonConvergence("companion eigenvalue solver failed");
  const Eigen::VectorXcd& ev = eig.eigenvalues();
  return std::vector<cplx>(ev.data(), ev.data() + ev.size());
}

RootResult find_roots(std::span<const cplx> coeffs, const RootOptions& options) {
  if (coeffs.empty()) throw InvalidArgument("empty polynomial");
  double max_coeff = 0.0;
  for (const cplx& c : coeffs) max_coeff = std::max(max_coeff, std::abs(c));
  if (!(max_coeff > 0.0)) throw InvalidArgument("zero polynomial has no constellation");

  const double cut = options.infinity_tol * max_coeff;
  const int n0 = static_cast<int>(coeffs.size()) - 1;
  int hi = n0;
  while (hi > 0 && std::abs(coeffs[static_cast<std::size_t>(hi)]) <= cut) --hi;
  int lo = 0;
  while (lo < hi && std::abs(coeffs[static_cast<std::size_t>(lo)]) <= cut) ++lo;

  RootResult result;
  result.degree_deficiency = n0 - hi;
  const std::span<const cplx> a = coeffs.subspan(static_cast<std::size_t>(lo),
                                                 static_cast<std::size_t>(hi - lo + 1));
  const int degree = hi - lo;

  std::vector<cplx> roots;
  if (degree == 1) {
    roots.push_back(-a[0] / a[1]);
  } else if (degree > 1) {
    result.method = RootMethod::Aberth;
    if (!aberth_roots(a, roots, options.max_iterations, options.residual_tol)) {
      result.method = RootMethod::Companion;
      roots = companion_roots(a);
    }
    polish(a, roots);
    double scale = 0.0;
    for (const cplx& c : a) scale = std::max(scale, std::abs(c));
    for (const cplx& z : roots) {
      if (!residual_ok(a, z, options.residual_tol, scale)) {
        throw NonConvergence("root finder failed the residual bound");
      }
    }
    std::vector<cplx> merged;
    for (const Cluster& c : cluster_roots(a, roots, options.cluster_radius)) {
      merged.insert(merged.end(), static_cast<std::size_t>(c.multiplicity), c.center);
    }
    roots = std::move(merged);
  }
  roots.insert(roots.end(), static_cast<std::size_t>(lo), cplx{});
  result.roots = std::move(roots);
  return result;
}

}  // namespace majorana
