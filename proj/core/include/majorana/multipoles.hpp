#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "majorana/sphere.hpp"
#include "majorana/spin.hpp"

namespace majorana {

// Husimi function |<z|psi>|^2 at the sphere point; the south pole is the limit
// |psi_S|^2.
double husimi_q(const SpinState& state, const SpherePoint& p);

// Q sampled on Gauss-Legendre nodes in cos(theta) and uniform phi nodes.
struct QGrid {
  SpinLabel label;
  std::vector<double> theta_nodes;  // ascending
  std::vector<double> phi_nodes;
  std::vector<double> theta_weights;
  Eigen::MatrixXd values;  // values(i, j) = Q(theta_i, phi_j)

  // (2S+1)/(4 pi) times the quadrature of Q; one for an exact rule.
  double normalization() const;
};

// Throws RangeError unless n_theta, n_phi >= 2.
QGrid q_grid(const SpinState& state, int n_theta, int n_phi);

// Full state-multipole spectrum rho_Kq = Tr(rho T_Kq^dagger).
class MultipoleSpectrum {
 public:
  MultipoleSpectrum(SpinLabel label, std::vector<std::vector<cplx>> components);

  const SpinLabel& label() const noexcept { return label_; }
  int max_order() const noexcept { return label_.two_s(); }
  cplx rho(int K, int q) const;
  const std::vector<cplx>& order(int K) const { return components_.at(static_cast<std::size_t>(K)); }
  // w_K for K = 0..2S.
  const std::vector<double>& lengths() const noexcept { return lengths_; }
  // A_M for M = 1..2S, stored at index M - 1.
  const std::vector<double>& cumulative() const noexcept { return cumulative_; }

 private:
  SpinLabel label_;
  std::vector<std::vector<cplx>> components_;  // components_[K][q + K]
  std::vector<double> lengths_;
  std::vector<double> cumulative_;
};

// <S,m'|T_Kq|S,m>. Throws RangeError unless 0 <= K <= 2S and |q| <= K.
Eigen::MatrixXcd tensor_operator(SpinLabel label, int K, int q);

MultipoleSpectrum multipoles(const SpinState& state);
// Density-matrix entry point (mixed states).
MultipoleSpectrum multipoles(SpinLabel label, const Eigen::MatrixXcd& density);

// w_K for K = 0..max_order without building the full spectrum.
std::vector<double> multipole_lengths(const SpinState& state, int max_order);

// A_M = sum_{K=1..M} w_K. Throws RangeError unless 1 <= M <= 2S.
double cumulative_quantumness(const MultipoleSpectrum& spectrum, int M);
double cumulative_quantumness(const SpinState& state, int M);

// Q-weighted directional moments <n_i> and <3 n_i n_j - delta_ij>.
Vec3 dipole(const SpinState& state);
Eigen::Matrix3d quadrupole(const SpinState& state);

// rho_Kq recovered from the Husimi function alone, C_K times the integral of
// Q against a spherical harmonic, with C_K fixed from |S,-S>.
std::vector<std::vector<cplx>> integral_multipoles(const SpinState& state);
double integral_calibration(SpinLabel label, int K);

}  // namespace majorana
