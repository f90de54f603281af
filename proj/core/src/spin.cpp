#include "majorana/spin.hpp"

#include <algorithm>
#include <cmath>

#include "majorana/errors.hpp"

namespace majorana {

SpinLabel::SpinLabel(int two_s) : two_s_(two_s) {
  if (two_s < 0) throw InvalidArgument("twoS must be nonnegative");
}

SpinState::SpinState(SpinLabel label, std::vector<cplx> amplitudes)
    : label_(label), amplitudes_(std::move(amplitudes)) {
  if (static_cast<int>(amplitudes_.size()) != label_.dimension()) {
    throw InvalidArgument("amplitude count " + std::to_string(amplitudes_.size()) +
                          " does not match 2S+1 = " + std::to_string(label_.dimension()));
  }
  double norm2 = 0.0;
  for (const cplx& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidArgument("non-finite amplitude");
    }
    norm2 += std::norm(a);
  }
  if (!(norm2 > 0.0)) throw InvalidArgument("zero state vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (cplx& a : amplitudes_) a *= inv;
}

Eigen::VectorXcd SpinState::vector() const {
  return Eigen::Map<const Eigen::VectorXcd>(amplitudes_.data(),
                                            static_cast<Eigen::Index>(amplitudes_.size()));
}

SpinState SpinState::from_vector(SpinLabel label, const Eigen::VectorXcd& v) {
  return SpinState(label, std::vector<cplx>(v.data(), v.data() + v.size()));
}

SpinState SpinState::with_canonical_phase() const {
  for (auto k = amplitudes_.size(); k-- > 0;) {
    if (std::abs(amplitudes_[k]) > 0.0) {
      const cplx phase = std::conj(amplitudes_[k]) / std::abs(amplitudes_[k]);
      std::vector<cplx> out(amplitudes_);
      for (cplx& a : out) a *= phase;
      out[k] = cplx(std::abs(amplitudes_[k]), 0.0);
      return SpinState(label_, std::move(out));
    }
  }
  return *this;
}

SpinState basis_state(SpinLabel label, int two_m) {
  if (std::abs(two_m) > label.two_s() || (two_m + label.two_s()) % 2 != 0) {
    throw RangeError("invalid magnetic quantum number 2m = " + std::to_string(two_m));
  }
  std::vector<cplx> amps(static_cast<std::size_t>(label.dimension()));
  amps[static_cast<std::size_t>((two_m + label.two_s()) / 2)] = 1.0;
  return SpinState(label, std::move(amps));
}

SpinState noon_state(SpinLabel label) {
  if (label.two_s() < 1) throw RangeError("NOON state needs 2S >= 1");
  std::vector<cplx> amps(static_cast<std::size_t>(label.dimension()));
  amps.front() = 1.0;
  amps.back() = 1.0;
  return SpinState(label, std::move(amps));
}

cplx overlap(const SpinState& a, const SpinState& b) {
  if (a.label() != b.label()) throw LabelMismatch("overlap of states with different spin");
  cplx sum{};
  for (int k = 0; k < a.dimension(); ++k) sum += std::conj(a[k]) * b[k];
  return sum;
}

double fidelity(const SpinState& a, const SpinState& b) { return std::abs(overlap(a, b)); }

double expectation(const SpinState& state, const Eigen::MatrixXcd& op) {
  const Eigen::VectorXcd v = state.vector();
  return (v.adjoint() * op * v)(0, 0).real();
}

SpinMatrices spin_matrices(SpinLabel label) {
  const int n = label.dimension();
  const double s = label.spin();
  SpinMatrices out;
  out.sz = Eigen::MatrixXcd::Zero(n, n);
  out.s_plus = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = k - s;
    out.sz(k, k) = m;
    if (k + 1 < n) out.s_plus(k + 1, k) = std::sqrt((s - m) * (s + m + 1.0));
  }
  out.s_minus = out.s_plus.adjoint();
  out.sx = 0.5 * (out.s_plus + out.s_minus);
  out.sy = cplx(0.0, -0.5) * (out.s_plus - out.s_minus);
  return out;
}

Eigen::MatrixXcd rotation_matrix(SpinLabel label, double theta, double phi) {
  const SpinMatrices s = spin_matrices(label);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(s.sy);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases(i) = std::polar(1.0, theta * lambda(i));
  }
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  Eigen::MatrixXcd ry = v * phases.asDiagonal() * v.adjoint();
  for (int k = 0; k < label.dimension(); ++k) {
    ry.row(k) *= std::polar(1.0, phi * (k - label.spin()));
  }
  return ry;
}

SpinState rotate(const SpinState& state, double theta, double phi) {
  const Eigen::MatrixXcd d = rotation_matrix(state.label(), theta, phi);
  return SpinState::from_vector(state.label(), d * state.vector());
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace majorana
