#include "majorana/kings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "majorana/errors.hpp"
#include "majorana/multipoles.hpp"
#include "majorana/optimize.hpp"
#include "majorana/random.hpp"

namespace majorana {

namespace {

void check_order(SpinLabel label, int M) {
  if (M < 1 || M > label.two_s()) {
    throw RangeError("multipole order M = " + std::to_string(M) + " outside 1.." + std::to_string(label.two_s()));
  }
}

std::vector<SpherePoint> points_from_angles(std::span<const double> angles) {
  std::vector<SpherePoint> pts;
  pts.reserve(angles.size() / 2);
  for (std::size_t i = 0; i + 1 < angles.size(); i += 2) {
    // Reflect theta into [0, pi] so the parametrization stays smooth.
    double theta = std::fmod(angles[i], 2.0 * std::numbers::pi);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    double phi = angles[i + 1];
    if (theta > std::numbers::pi) {
      theta = 2.0 * std::numbers::pi - theta;
      phi += std::numbers::pi;
    }
    pts.emplace_back(theta, phi);
  }
  return pts;
}

double sum_lengths(const std::vector<double>& w, int M) {
  double a = 0.0;
  for (int K = 1; K <= M; ++K) a += w[static_cast<std::size_t>(K)];
  return a;
}

// Barrier added while backtracking: keeps the line search off collision points.
double collision_penalty(std::span<const double> angles) {
  const std::vector<SpherePoint> pts = points_from_angles(angles);
  double pen = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec3 a = pts[i].unit_vector();
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = chordal_distance(a, pts[j].unit_vector());
      if (d < 1e-9) pen += 1.0 - d / 1e-9;
    }
  }
  return pen;
}

std::vector<double> sorted_angles(const std::vector<SpherePoint>& pts) {
  std::vector<std::pair<double, double>> p;
  for (const auto& s : pts) p.emplace_back(s.theta(), s.phi());
  std::sort(p.begin(), p.end());
  std::vector<double> flat;
  for (const auto& [a, b] : p) {
    flat.push_back(a);
    flat.push_back(b);
  }
  return flat;
}

// Rotation taking unit vector n to the north pole (Rodrigues about n x z).
Eigen::Matrix3d to_north(const Vec3& n) {
  const Eigen::Vector3d v(n[0], n[1], n[2]);
  const Eigen::Vector3d z(0.0, 0.0, 1.0);
  const Eigen::Vector3d axis = v.cross(z);
  const double s = axis.norm();
  const double c = v.dot(z);
  if (s < 1e-15) {
    if (c > 0.0) return Eigen::Matrix3d::Identity();
    return Eigen::Matrix3d(Eigen::AngleAxisd(std::numbers::pi, Eigen::Vector3d::UnitX()));
  }
  return Eigen::Matrix3d(Eigen::AngleAxisd(std::atan2(s, c), axis / s));
}

struct RestartOutcome {
  std::vector<double> angles;
  double value = 0.0;
  bool converged = false;
};

RestartOutcome run_restart(SpinLabel label, const SearchConfig& config, int index) {
  Rng rng = make_stream(config.seed, static_cast<std::uint64_t>(index));
  const int n = label.two_s();
  const Objective f = [&](std::span<const double> x) { return angle_objective(label, x, config.M); };

  std::vector<double> best_start;
  double best_value = std::numeric_limits<double>::infinity();
  for (int s = 0; s < std::max(1, config.screening); ++s) {
    std::vector<double> x;
    for (int k = 0; k < n; ++k) {
      const SpherePoint p = random_sphere_point(rng);
      x.push_back(p.theta());
      x.push_back(p.phi());
    }
    const double v = f(x);
    if (v < best_value) {
      best_value = v;
      best_start = std::move(x);
    }
  }

  NelderMeadOptions nm;
  nm.max_evaluations = std::max(200, 100 * static_cast<int>(best_start.size()));
  nm.value_spread = 0.1 * config.f_tol;
  OptimizeResult r = nelder_mead(f, best_start, nm);

  BfgsOptions bf;
  bf.max_iterations = config.max_iters;
  bf.grad_tol = config.grad_tol;
  bf.value_floor = 0.0;
  bf.line_objective = [&](std::span<const double> x) { return f(x) + collision_penalty(x); };
  OptimizeResult polished = bfgs(f, r.x, bf);
  if (polished.value <= r.value) r = polished;

  RestartOutcome out;
  out.angles = std::move(r.x);
  out.value = std::min(r.value, best_value);
  if (r.value > best_value) out.angles = best_start;
  out.converged = out.value <= config.f_tol || polished.gradient_norm <= config.grad_tol;
  return out;
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("MAJORANA_NUM_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double angle_objective(SpinLabel label, std::span<const double> angles, int M) {
  check_order(label, M);
  if (angles.size() != static_cast<std::size_t>(2 * label.two_s())) throw InvalidArgument("expected 4S angles");
  const std::vector<SpherePoint> pts = points_from_angles(angles);
  return sum_lengths(multipole_lengths(state_from_sphere_points(label, pts), M), M);
}

double objective(const Constellation& constellation, int M) {
  check_order(constellation.label(), M);
  return cumulative_quantumness(state_from_constellation(constellation), M);
}

Constellation gauge_fix(const Constellation& constellation) {
  const std::vector<Vec3> v = constellation.unit_vectors();
  const std::size_t n = v.size();
  if (n == 0) return constellation;
  std::vector<SpherePoint> best;
  std::vector<double> best_key;
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Matrix3d r1 = to_north(v[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i && n > 1) continue;
      Eigen::Vector3d vj = r1 * Eigen::Vector3d(v[j][0], v[j][1], v[j][2]);
      const double phi = std::atan2(vj.y(), vj.x());
      const Eigen::Matrix3d r = Eigen::Matrix3d(Eigen::AngleAxisd(-phi, Eigen::Vector3d::UnitZ())) * r1;
      std::vector<SpherePoint> pts(n);
      for (std::size_t k = 0; k < n; ++k) {
        const Eigen::Vector3d w = r * Eigen::Vector3d(v[k][0], v[k][1], v[k][2]);
        pts[k] = SpherePoint::from_unit_vector({w.x(), w.y(), w.z()});
      }
      pts[i] = SpherePoint(0.0, 0.0);
      if (j != i) pts[j] = SpherePoint(pts[j].theta(), 0.0);
      const std::vector<double> key = sorted_angles(pts);
      if (best.empty() || key < best_key) {
        std::vector<SpherePoint> ordered{pts[i]};
        if (j != i) ordered.push_back(pts[j]);
        std::vector<SpherePoint> rest;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != i && k != j) rest.push_back(pts[k]);
        }
        std::sort(rest.begin(), rest.end(), [](const SpherePoint& a, const SpherePoint& b) {
          return std::pair(a.theta(), a.phi()) < std::pair(b.theta(), b.phi());
        });
        ordered.insert(ordered.end(), rest.begin(), rest.end());
        best = std::move(ordered);
        best_key = key;
      }
      if (n == 1) break;
    }
  }
  return Constellation::from_stars(constellation.label(), best);
}

KingResult minimize(SpinLabel label, const SearchConfig& config) {
  check_order(label, config.M);
  if (config.restarts < 1) throw InvalidArgument("restarts must be >= 1");
  if (config.max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
  if (!(config.grad_tol > 0.0) || !(config.f_tol > 0.0)) throw InvalidArgument("tolerances must be > 0");

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  const int threads = std::min(config.restarts, config.threads > 0 ? config.threads : default_thread_count());
  if (threads <= 1) {
    for (int r = 0; r < config.restarts; ++r) outcomes[static_cast<std::size_t>(r)] = run_restart(label, config, r);
  } else {
    std::vector<std::jthread> pool;
    for (int tid = 0; tid < threads; ++tid) {
      pool.emplace_back([&, tid] {
        for (int r = tid; r < config.restarts; r += threads) {
          outcomes[static_cast<std::size_t>(r)] = run_restart(label, config, r);
        }
      });
    }
  }

  KingResult result{Constellation(label, {}, label.two_s()), config.M, 0.0, 0, 0, {}, false};
  std::vector<double> best_key;
  double best_value = std::numeric_limits<double>::infinity();
  for (const RestartOutcome& o : outcomes) {
    result.history.push_back(o.value);
    if (o.converged) ++result.restarts_converged;
    const Constellation fixed = gauge_fix(Constellation::from_stars(label, points_from_angles(o.angles)));
    const double value = objective(fixed, config.M);
    std::vector<double> key = sorted_angles(fixed.sphere_points());
    if (value < best_value || (value == best_value && key < best_key)) {
      best_value = value;
      best_key = std::move(key);
      result.constellation = fixed;
      result.objective = value;
    }
  }
  result.converged = result.restarts_converged > 0;
  const MultipoleSpectrum spec = multipoles(state_from_constellation(result.constellation));
  result.unpolarized_order = 0;
  for (int M = 1; M <= label.two_s(); ++M) {
    if (spec.cumulative()[static_cast<std::size_t>(M - 1)] <= config.zero_tol) result.unpolarized_order = M;
  }
  return result;
}

int max_unpolarized_order(SpinLabel label, const SearchConfig& config, double zero_tol,
                          std::vector<KingResult>* runs) {
  if (!(zero_tol > 0.0)) throw InvalidArgument("zero_tol must be > 0");
  int order = 0;
  for (int M = 1; M <= label.two_s(); ++M) {
    SearchConfig c = config;
    c.M = M;
    c.zero_tol = zero_tol;
    KingResult r = minimize(label, c);
    const bool reached = r.objective <= zero_tol;
    if (runs) runs->push_back(std::move(r));
    if (!reached) break;
    order = M;
  }
  return order;
}

}  // namespace majorana
