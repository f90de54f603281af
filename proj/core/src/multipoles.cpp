#include "majorana/multipoles.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "majorana/clebsch_gordan.hpp"
#include "majorana/errors.hpp"
#include "majorana/quadrature.hpp"
#include "majorana/spherical_harmonics.hpp"

namespace majorana {
namespace {

void check_order(SpinLabel label, int K, int q) {
  if (K < 0 || K > label.two_s() || std::abs(q) > K) {
    throw RangeError("multipole index (K=" + std::to_string(K) + ", q=" + std::to_string(q) +
                     ") out of range for 2S=" + std::to_string(label.two_s()));
  }
}

// <z|psi> with |z> the coherent state at p (angles form, stable at the poles).
cplx coherent_amplitude(const SpinState& state, const SpherePoint& p) {
  const int n = state.two_s();
  const double s = std::sin(0.5 * p.theta());
  const double c = std::cos(0.5 * p.theta());
  // sum_k sqrt(binom) s^k c^{2S-k} e^{+ik phi} psi_k
  cplx acc{};
  const cplx rot = std::polar(1.0, p.phi());
  cplx phase(1.0);
  for (int k = 0; k <= n; ++k) {
    acc += std::sqrt(binomial(n, k)) * std::pow(s, k) * std::pow(c, n - k) * phase * state[k];
    phase *= rot;
  }
  return acc;
}

// Integrates g(theta, phi) * Q over the sphere with an exact product rule for
// integrands of bandwidth <= band.
template <typename F>
auto integrate_with_q(const SpinState& state, int band, F&& g) {
  const int n_theta = band / 2 + 2;
  const int n_phi = band + 2;
  const SphereQuadrature quad = sphere_quadrature(n_theta, n_phi);
  using R = decltype(g(SpherePoint{}));
  R acc;
  if constexpr (requires { R::Zero(); }) {
    acc = R::Zero();  // Eigen leaves {} uninitialized
  } else {
    acc = R{};
  }
  for (std::size_t i = 0; i < quad.theta.size(); ++i) {
    for (std::size_t j = 0; j < quad.phi.size(); ++j) {
      const SpherePoint p(quad.theta[i], quad.phi[j]);
      acc += (quad.weight(i, j) * husimi_q(state, p)) * g(p);
    }
  }
  return acc;
}

}  // namespace

double husimi_q(const SpinState& state, const SpherePoint& p) {
  return std::norm(coherent_amplitude(state, p));
}

double QGrid::normalization() const {
  const double w_phi = 2.0 * std::numbers::pi / static_cast<double>(phi_nodes.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    acc += theta_weights[static_cast<std::size_t>(i)] * w_phi * values.row(i).sum();
  }
  return acc * label.dimension() / (4.0 * std::numbers::pi);
}

QGrid q_grid(const SpinState& state, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) throw RangeError("q_grid needs n_theta >= 2 and n_phi >= 2");
  const SphereQuadrature quad = sphere_quadrature(n_theta, n_phi);
  QGrid grid{state.label(), quad.theta, quad.phi, quad.theta_weights, Eigen::MatrixXd(n_theta, n_phi)};
  for (int i = 0; i < n_theta; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      grid.values(i, j) = husimi_q(state, SpherePoint(quad.theta[static_cast<std::size_t>(i)],
                                                      quad.phi[static_cast<std::size_t>(j)]));
    }
  }
  return grid;
}

MultipoleSpectrum::MultipoleSpectrum(SpinLabel label, std::vector<std::vector<cplx>> components)
    : label_(label), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != label_.two_s() + 1) {
    throw InvalidArgument("multipole spectrum needs orders K = 0..2S");
  }
  for (std::size_t K = 0; K < components_.size(); ++K) {
    if (components_[K].size() != 2 * K + 1) throw InvalidArgument("order K needs 2K+1 components");
    double w = 0.0;
    for (const cplx& c : components_[K]) w += std::norm(c);
    lengths_.push_back(w);
  }
  double running = 0.0;
  for (std::size_t K = 1; K < lengths_.size(); ++K) {
    running += lengths_[K];
    cumulative_.push_back(running);
  }
}

cplx MultipoleSpectrum::rho(int K, int q) const {
  check_order(label_, K, q);
  return components_[static_cast<std::size_t>(K)][static_cast<std::size_t>(q + K)];
}

Eigen::MatrixXcd tensor_operator(SpinLabel label, int K, int q) {
  check_order(label, K, q);
  const TensorTable& table = TensorTable::get(label);
  const int n = label.dimension();
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    if (k + q >= 0 && k + q < n) t(k + q, k) = table.element(K, q, k);
  }
  return t;
}

MultipoleSpectrum multipoles(const SpinState& state) {
  const SpinLabel label = state.label();
  const TensorTable& table = TensorTable::get(label);
  const int n = label.dimension();
  std::vector<std::vector<cplx>> comps(static_cast<std::size_t>(n));
  for (int K = 0; K < n; ++K) {
    auto& row = comps[static_cast<std::size_t>(K)];
    row.resize(static_cast<std::size_t>(2 * K + 1));
    for (int q = -K; q <= K; ++q) {
      // Tr(|psi><psi| T^dagger) = sum_m psi_{m+q} conj(psi_m) T_{m+q,m}
      cplx acc{};
      for (int k = std::max(0, -q); k < std::min(n, n - q); ++k) {
        acc += state[k + q] * std::conj(state[k]) * table.element(K, q, k);
      }
      row[static_cast<std::size_t>(q + K)] = acc;
    }
  }
  return MultipoleSpectrum(label, std::move(comps));
}

MultipoleSpectrum multipoles(SpinLabel label, const Eigen::MatrixXcd& density) {
  const int n = label.dimension();
  if (density.rows() != n || density.cols() != n) {
    throw LabelMismatch("density matrix dimension does not match 2S+1");
  }
  const TensorTable& table = TensorTable::get(label);
  std::vector<std::vector<cplx>> comps(static_cast<std::size_t>(n));
  for (int K = 0; K < n; ++K) {
    auto& row = comps[static_cast<std::size_t>(K)];
    row.resize(static_cast<std::size_t>(2 * K + 1));
    for (int q = -K; q <= K; ++q) {
      cplx acc{};
      for (int k = std::max(0, -q); k < std::min(n, n - q); ++k) {
        acc += density(k + q, k) * table.element(K, q, k);
      }
      row[static_cast<std::size_t>(q + K)] = acc;
    }
  }
  return MultipoleSpectrum(label, std::move(comps));
}

std::vector<double> multipole_lengths(const SpinState& state, int max_order) {
  const SpinLabel label = state.label();
  if (max_order < 0 || max_order > label.two_s()) throw RangeError("multipole order out of range");
  const TensorTable& table = TensorTable::get(label);
  const int n = label.dimension();
  std::vector<double> w(static_cast<std::size_t>(max_order + 1), 0.0);
  for (int K = 0; K <= max_order; ++K) {
    double acc_w = 0.0;
    for (int q = -K; q <= K; ++q) {
      cplx acc{};
      for (int k = std::max(0, -q); k < std::min(n, n - q); ++k) {
        acc += state[k + q] * std::conj(state[k]) * table.element(K, q, k);
      }
      acc_w += std::norm(acc);
    }
    w[static_cast<std::size_t>(K)] = acc_w;
  }
  return w;
}

double cumulative_quantumness(const MultipoleSpectrum& spectrum, int M) {
  if (M < 1 || M > spectrum.max_order()) {
    throw RangeError("cumulative order M=" + std::to_string(M) + " outside 1..2S");
  }
  return spectrum.cumulative()[static_cast<std::size_t>(M - 1)];
}

double cumulative_quantumness(const SpinState& state, int M) {
  if (M < 1 || M > state.two_s()) {
    throw RangeError("cumulative order M=" + std::to_string(M) + " outside 1..2S");
  }
  const std::vector<double> w = multipole_lengths(state, M);
  double a = 0.0;
  for (int K = 1; K <= M; ++K) a += w[static_cast<std::size_t>(K)];
  return a;
}

Vec3 dipole(const SpinState& state) {
  const int band = state.two_s() + 1;
  const double norm = integrate_with_q(state, band, [](const SpherePoint&) { return 1.0; });
  const Eigen::Vector3d moment = integrate_with_q(state, band, [](const SpherePoint& p) {
    const Vec3 v = p.unit_vector();
    return Eigen::Vector3d(v[0], v[1], v[2]);
  });
  return {moment(0) / norm, moment(1) / norm, moment(2) / norm};
}

Eigen::Matrix3d quadrupole(const SpinState& state) {
  const int band = state.two_s() + 2;
  const double norm = integrate_with_q(state, band, [](const SpherePoint&) { return 1.0; });
  const Eigen::Matrix3d moment = integrate_with_q(state, band, [](const SpherePoint& p) {
    const Vec3 v = p.unit_vector();
    const Eigen::Vector3d n(v[0], v[1], v[2]);
    return Eigen::Matrix3d(3.0 * n * n.transpose() - Eigen::Matrix3d::Identity());
  });
  return moment / norm;
}

namespace {

std::vector<cplx> raw_integrals(const SpinState& state, int K) {
  std::vector<cplx> out(static_cast<std::size_t>(2 * K + 1));
  const int band = state.two_s() + K;
  for (int q = -K; q <= K; ++q) {
    // The label (theta, phi) of |z> points along (pi - theta, phi) in spin
    // space, so the harmonic is taken at that direction.
    out[static_cast<std::size_t>(q + K)] =
        integrate_with_q(state, band, [K, q](const SpherePoint& p) {
          return std::conj(spherical_harmonic(K, q, SpherePoint(std::numbers::pi - p.theta(), p.phi())));
        });
  }
  return out;
}

}  // namespace

double integral_calibration(SpinLabel label, int K) {
  check_order(label, K, 0);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, double> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({label.two_s(), K});
    if (it != cache.end()) return it->second;
  }
  // Calibrate on |S,-S>. Its Q is ((1+x)/2)^{2S} with x = cos(theta), so the
  // raw integral is closed form (Rodrigues):
  //   int ((1+x)/2)^n P_K(x) dx = 2 n!^2 / ((n-K)! (n+K+1)!).
  // Quadrature would cancel O(1) terms down to ~1e-8 at high K.
  const int n = label.two_s();
  double moment = 2.0;
  for (int j = 0; j < K; ++j) moment *= static_cast<double>(n - j) / (n + j + 1);
  moment /= n + K + 1;
  const double parity = K % 2 == 0 ? 1.0 : -1.0;  // P_K(-x)
  const double integral = 2.0 * std::numbers::pi * std::sqrt((2.0 * K + 1.0) / (4.0 * std::numbers::pi)) * parity * moment;
  const double c = multipoles(basis_state(label, -n)).rho(K, 0).real() / integral;
  std::lock_guard<std::mutex> lock(mutex);
  cache[{label.two_s(), K}] = c;
  return c;
}

std::vector<std::vector<cplx>> integral_multipoles(const SpinState& state) {
  std::vector<std::vector<cplx>> out;
  for (int K = 0; K <= state.two_s(); ++K) {
    std::vector<cplx> row = raw_integrals(state, K);
    const double c = integral_calibration(state.label(), K);
    for (cplx& x : row) x *= c;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace majorana
