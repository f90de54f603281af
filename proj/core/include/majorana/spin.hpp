#pragma once

#include <complex>
#include <compare>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace majorana {

using cplx = std::complex<double>;

// Spin quantum number stored as the integer 2S so half-integers are exact.
class SpinLabel {
 public:
  explicit SpinLabel(int two_s);

  int two_s() const noexcept { return two_s_; }
  int dimension() const noexcept { return two_s_ + 1; }
  double spin() const noexcept { return 0.5 * two_s_; }

  friend auto operator<=>(const SpinLabel&, const SpinLabel&) = default;

 private:
  int two_s_;
};

// Normalized pure state of a spin S. Amplitude k holds psi_m with m = k - S,
// so index 0 is |S,-S> and index 2S is |S,S>.
class SpinState {
 public:
  // Normalizes; throws InvalidArgument on wrong length, non-finite entries or
  // the zero vector.
  SpinState(SpinLabel label, std::vector<cplx> amplitudes);

  const SpinLabel& label() const noexcept { return label_; }
  int two_s() const noexcept { return label_.two_s(); }
  int dimension() const noexcept { return label_.dimension(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  cplx operator[](int k) const { return amplitudes_[static_cast<std::size_t>(k)]; }

  Eigen::VectorXcd vector() const;
  static SpinState from_vector(SpinLabel label, const Eigen::VectorXcd& v);

  // Multiplies by a global phase so the highest-index nonzero amplitude is
  // real and positive.
  SpinState with_canonical_phase() const;

 private:
  SpinLabel label_;
  std::vector<cplx> amplitudes_;
};

// |S,m> with m = two_m / 2.
SpinState basis_state(SpinLabel label, int two_m);

// (|S,S> + |S,-S>)/sqrt(2). Requires 2S >= 1.
SpinState noon_state(SpinLabel label);

// Sum_m conj(a_m) b_m. Throws LabelMismatch when labels differ.
cplx overlap(const SpinState& a, const SpinState& b);

// |<a|b>|, insensitive to global phase.
double fidelity(const SpinState& a, const SpinState& b);

// <psi|op|psi> for a Hermitian operator in the |S,m> basis (storage order).
double expectation(const SpinState& state, const Eigen::MatrixXcd& op);

struct SpinMatrices {
  Eigen::MatrixXcd sx, sy, sz, s_plus, s_minus;
};

// Angular momentum matrices in storage order (row/col k <-> m = k - S).
SpinMatrices spin_matrices(SpinLabel label);

// D(theta, phi) = exp(i phi Sz) exp(i theta Sy).
Eigen::MatrixXcd rotation_matrix(SpinLabel label, double theta, double phi);

SpinState rotate(const SpinState& state, double theta, double phi);

// binom(n, k) as a double; exact for the sizes used here.
double binomial(int n, int k);

}  // namespace majorana
