#include "majorana/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "majorana/errors.hpp"
#include "majorana/matching.hpp"
#include "majorana/polynomial.hpp"

namespace majorana {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Velocities without collision checks; non-finite entries signal a collision.
void velocities_into(std::span<const cplx> roots, const std::vector<Poly>& symbol, std::vector<cplx>& out,
                     std::vector<cplx>& inv) {
  const std::size_t n = roots.size();
  out.assign(n, cplx{});
  const std::size_t orders = std::min(symbol.size(), n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    inv.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) inv.push_back(1.0 / (roots[k] - roots[j]));
    }
    const std::vector<cplx> e = elementary_symmetric(inv);
    cplx sum{};
    double factorial = 1.0;
    for (std::size_t order = 1; order < orders; ++order) {
      factorial *= static_cast<double>(order);
      sum += poly_eval(symbol[order], roots[k]) * factorial * e[order - 1];
    }
    out[k] = cplx(0.0, 1.0) * sum;
  }
}

double min_separation(std::span<const ExtendedComplex> stars) {
  std::vector<Vec3> v;
  v.reserve(stars.size());
  for (const auto& z : stars) v.push_back(stereo_to_unit_vector(z));
  double best = kInf;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::min(best, chordal_distance(v[i], v[j]));
  }
  return best;
}

std::vector<ExtendedComplex> as_extended(std::span<const cplx> w) {
  return {w.begin(), w.end()};
}

struct Frame {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  Hamiltonian h;
};

Frame make_frame(const Hamiltonian& h, double theta, double phi) {
  const Eigen::Matrix2cd u = rotation_matrix(SpinLabel(1), theta, phi);
  return Frame{u, h.transformed(rotation_matrix(h.label(), theta, phi))};
}

double frame_radius(const Eigen::Matrix2cd& u, std::span<const ExtendedComplex> stars) {
  double r = 0.0;
  for (const auto& z : stars) {
    const ExtendedComplex w = mobius_apply(u, z);
    if (w.is_infinite()) return kInf;
    r = std::max(r, std::abs(w.value()));
  }
  return r;
}

// Rotation from a fixed grid that pulls every star as close to the north pole
// as possible.
Frame choose_frame(const Hamiltonian& h, std::span<const ExtendedComplex> stars) {
  constexpr int n_theta = 12;
  constexpr int n_phi = 24;
  double best = kInf;
  double best_theta = 0.0, best_phi = 0.0;
  for (int i = 0; i <= n_theta; ++i) {
    const double theta = std::numbers::pi * i / n_theta;
    for (int j = 0; j < (i == 0 ? 1 : n_phi); ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      const double r = frame_radius(rotation_matrix(SpinLabel(1), theta, phi), stars);
      if (r < best) {
        best = r;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }
  return make_frame(h, best_theta, best_phi);
}

std::vector<ExtendedComplex> to_original(const Frame& f, std::span<const cplx> w) {
  const Eigen::Matrix2cd inv = f.u.adjoint();
  std::vector<ExtendedComplex> out;
  out.reserve(w.size());
  for (const cplx& z : w) out.push_back(mobius_apply(inv, z));
  return out;
}

std::vector<cplx> to_frame(const Frame& f, std::span<const ExtendedComplex> stars) {
  std::vector<cplx> out;
  out.reserve(stars.size());
  for (const auto& z : stars) {
    const ExtendedComplex w = mobius_apply(f.u, z);
    if (w.is_infinite()) throw DegenerateConstellation("star at infinity in the working frame");
    out.push_back(w.value());
  }
  return out;
}

Constellation constellation_of(SpinLabel label, std::span<const ExtendedComplex> stars) {
  std::vector<cplx> roots;
  int infinity = 0;
  for (const auto& z : stars) {
    if (z.is_infinite()) {
      ++infinity;
    } else {
      roots.push_back(z.value());
    }
  }
  return Constellation(label, std::move(roots), infinity);
}

// Dormand-Prince 5(4) tableau.
constexpr std::array<double, 7> kC{0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr std::array<double, 7> kE{71.0 / 57600, 0.0, -71.0 / 16695, 71.0 / 1920, -17253.0 / 339200, 22.0 / 525,
                                   -1.0 / 40};

class Stepper {
 public:
  explicit Stepper(std::size_t n) : k_(7, std::vector<cplx>(n)), tmp_(n), next_(n) {}

  // One trial step; returns the scaled error norm (infinite if a stage hit a
  // collision). On return next() holds the 5th-order solution and
  // last_slope() its derivative.
  double attempt(const std::vector<Poly>& symbol, const std::vector<cplx>& y, const std::vector<cplx>& f0,
                 double h, double rtol, double atol) {
    const std::size_t n = y.size();
    k_[0] = f0;
    for (int s = 1; s < 7; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        cplx acc{};
        for (int j = 0; j < s; ++j) acc += kA[s][j] * k_[static_cast<std::size_t>(j)][i];
        tmp_[i] = y[i] + h * acc;
      }
      if (s == 6) next_ = tmp_;
      velocities_into(tmp_, symbol, k_[static_cast<std::size_t>(s)], scratch_);
      for (const cplx& v : k_[static_cast<std::size_t>(s)]) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return kInf;
      }
    }
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx e{};
      for (int s = 0; s < 7; ++s) e += kE[static_cast<std::size_t>(s)] * k_[static_cast<std::size_t>(s)][i];
      const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(next_[i]));
      err = std::max(err, std::abs(h * e) / scale);
    }
    return err;
  }

  const std::vector<cplx>& next() const { return next_; }
  const std::vector<cplx>& last_slope() const { return k_[6]; }

 private:
  std::vector<std::vector<cplx>> k_;
  std::vector<cplx> tmp_, next_, scratch_;
};

}  // namespace

std::vector<cplx> star_velocities(std::span<const cplx> roots, const Hamiltonian& h) {
  std::vector<cplx> out, inv;
  velocities_into(roots, h.symbol(), out, inv);
  return out;
}

std::vector<cplx> star_velocities(const Constellation& constellation, const Hamiltonian& h, double collision_tol) {
  if (constellation.label() != h.label()) throw LabelMismatch("constellation and Hamiltonian spins differ");
  if (constellation.infinity_count() > 0) throw DegenerateConstellation("star at infinity");
  const auto roots = constellation.finite_roots();
  if (min_separation(as_extended(roots)) < collision_tol) throw DegenerateConstellation("coincident stars");
  return star_velocities(roots, h);
}

SpinState evolve_exact(const SpinState& state, const Hamiltonian& h, double t) {
  if (state.label() != h.label()) throw LabelMismatch("state and Hamiltonian spins differ");
  const Eigen::MatrixXcd& v = h.eigenvectors();
  Eigen::VectorXcd c = v.adjoint() * state.vector();
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::exp(cplx(0.0, -h.eigenvalues()(i) * t));
  return SpinState::from_vector(state.label(), v * c);
}

double equilibrium_residual(const Constellation& constellation, const Hamiltonian& h) {
  if (constellation.label() != h.label()) throw LabelMismatch("constellation and Hamiltonian spins differ");
  if (constellation.infinity_count() > 0) throw DegenerateConstellation("star at infinity");
  const auto roots = constellation.finite_roots();

  // Group coincident stars.
  std::vector<std::pair<cplx, int>> clusters;
  for (const cplx& z : roots) {
    bool merged = false;
    for (auto& [c, m] : clusters) {
      if (std::abs(z - c) <= 1e-7 * (1.0 + std::abs(c))) {
        ++m;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.emplace_back(z, 1);
  }
  if (clusters.size() == roots.size()) {
    double worst = 0.0;
    for (const cplx& v : star_velocities(roots, h)) worst = std::max(worst, std::abs(v));
    return worst;
  }

  // f = prod (z - z_k); a cluster of multiplicity m moves rigidly with
  // velocity i (Hf)^{(m-1)}(c) / f^{(m)}(c) when the lower derivatives of Hf
  // vanish there, and splits otherwise.
  const std::vector<cplx> e = elementary_symmetric(roots);
  const std::size_t r = roots.size();
  Poly f(static_cast<std::size_t>(h.label().two_s() + 1), cplx{});
  for (std::size_t k = 0; k <= r; ++k) f[k] = ((r - k) % 2 == 0 ? 1.0 : -1.0) * e[r - k];
  const Poly hf = h.apply(f);
  double worst = 0.0;
  for (const auto& [c, m] : clusters) {
    const std::vector<cplx> th = poly_taylor(hf, c, m);
    const std::vector<cplx> tf = poly_taylor(f, c, m + 1);
    const double scale = std::max(h.spectral_norm(), 1e-300) * poly_magnitude(f, std::abs(c));
    for (int j = 0; j + 1 < m; ++j) {
      if (std::abs(th[static_cast<std::size_t>(j)]) > 1e-9 * scale) return kInf;
    }
    const cplx v = cplx(0.0, 1.0) * th[static_cast<std::size_t>(m - 1)] /
                   (static_cast<double>(m) * tf[static_cast<std::size_t>(m)]);
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

StarTrajectory evolve(const SpinState& state, const Hamiltonian& h, double t_final, const EvolveOptions& options) {
  if (state.label() != h.label()) throw LabelMismatch("state and Hamiltonian spins differ");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw InvalidArgument("t_final must be finite and >= 0");
  const SpinLabel label = state.label();
  const double norm = h.spectral_norm();
  double dt_max = options.dt_max > 0.0 ? options.dt_max : (norm > 0.0 ? 0.01 / norm : std::max(t_final, 1.0));

  std::vector<double> outputs = options.output_times;
  if (outputs.empty()) {
    const int n = t_final > 0.0 ? static_cast<int>(std::ceil(t_final / dt_max - 1e-9)) : 0;
    for (int i = 0; i <= n; ++i) outputs.push_back(n == 0 ? 0.0 : t_final * i / n);
  }
  for (double t : outputs) {
    if (!(t >= 0.0 && t <= t_final)) throw InvalidArgument("output times must lie in [0, t_final]");
  }
  std::sort(outputs.begin(), outputs.end());
  outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());

  StarTrajectory traj;
  std::size_t next_out = 0;
  bool in_fallback = false;
  auto record = [&](double t, const std::vector<ExtendedComplex>& stars) {
    while (next_out < outputs.size() && outputs[next_out] <= t) {
      traj.times.push_back(outputs[next_out]);
      traj.tracks.push_back(stars);
      traj.snapshots.push_back(constellation_of(label, stars));
      traj.fallback.push_back(in_fallback);
      ++next_out;
    }
  };
  auto next_target = [&]() { return next_out < outputs.size() ? outputs[next_out] : t_final; };

  std::vector<ExtendedComplex> track = constellation_from_state(state, options.roots).stars();
  double t = 0.0;
  in_fallback = label.two_s() > 1 && min_separation(track) < options.enter_distance;
  record(0.0, track);

  Stepper stepper(static_cast<std::size_t>(label.two_s()));
  std::vector<cplx> w, slope, inv;

  while (t < t_final) {
    if (in_fallback) {
      const double start = t;
      double chunk = 1e-6 * dt_max;
      while (t < t_final) {
        const double t_next = std::min({t + chunk, next_target(), t_final});
        const auto exact = constellation_from_state(evolve_exact(state, h, t_next), options.roots).stars();
        track = match_stars(track, exact);
        t = t_next;
        chunk = std::min(2.0 * chunk, dt_max);
        const bool leaving = min_separation(track) > options.exit_distance;
        record(t, track);
        if (leaving) break;
      }
      traj.fallback_intervals.emplace_back(start, t);
      in_fallback = false;
      continue;
    }

    // Star-ODE segment in a frame where every star is finite and moderate.
    Frame frame{Eigen::Matrix2cd::Identity(), h};
    // Crowded constellations may have no frame far below the threshold; the
    // trigger backs off to twice the radius just reached so we do not thrash.
    double trigger = options.reframe_radius;
    auto reframe = [&] {
      frame = choose_frame(h, track);
      ++traj.reframes;
      trigger = std::max(options.reframe_radius, 2.0 * frame_radius(frame.u, track));
    };
    if (frame_radius(frame.u, track) > trigger) reframe();
    w = to_frame(frame, track);
    velocities_into(w, frame.h.symbol(), slope, inv);
    double vmax = 0.0;
    for (const cplx& v : slope) vmax = std::max(vmax, std::abs(v));
    double step = vmax > 0.0 ? std::min(dt_max, 0.01 / vmax) : dt_max;

    bool switch_to_fallback = false;
    while (t < t_final) {
      const double target = next_target();
      const double hs = std::min({step, dt_max, target - t});
      const bool clipped = hs < step;
      const double err = stepper.attempt(frame.h.symbol(), w, slope, hs, options.rtol, options.atol);
      if (err <= 1.0) {
        ++traj.steps_accepted;
        w = stepper.next();
        slope = stepper.last_slope();
        t = (hs == target - t) ? target : t + hs;
        const double grow = err > 0.0 ? std::min(5.0, 0.9 * std::pow(err, -0.2)) : 5.0;
        if (!clipped) step = hs * grow;
        const std::vector<ExtendedComplex> frame_stars = as_extended(w);
        if (min_separation(frame_stars) < options.enter_distance) {
          track = match_stars(track, to_original(frame, w));
          record(t, track);
          switch_to_fallback = true;
          break;
        }
        double radius = 0.0;
        for (const cplx& z : w) radius = std::max(radius, std::abs(z));
        if (t >= target || radius > trigger) {
          track = to_original(frame, w);
          record(t, track);
        }
        if (radius > trigger) {
          reframe();
          w = to_frame(frame, track);
          velocities_into(w, frame.h.symbol(), slope, inv);
        }
      } else {
        ++traj.steps_rejected;
        step = hs * (std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.25);
        if (step < 1e-14 * std::max(t_final, 1e-300)) {
          track = to_original(frame, w);
          if (min_separation(track) < options.exit_distance) {
            switch_to_fallback = true;
            break;
          }
          throw StepUnderflow("adaptive step collapsed at t = " + std::to_string(t));
        }
      }
    }
    if (switch_to_fallback) {
      in_fallback = true;
    } else {
      track = to_original(frame, w);
    }
  }
  record(t_final, track);
  return traj;
}

}  // namespace majorana
