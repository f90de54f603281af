#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "majorana/spin.hpp"

namespace majorana {

// Polynomial coefficient list in ascending powers of z.
using Poly = std::vector<cplx>;

// Hermitian spin Hamiltonian together with its differential symbol: acting on
// stellar functions, H f = sum_n h_n(z) f^{(n)}(z).
class Hamiltonian {
 public:
  // Throws InvalidArgument on wrong shape, non-finite entries, or when the
  // matrix is not Hermitian to 1e-12 (relative to its largest entry).
  Hamiltonian(SpinLabel label, Eigen::MatrixXcd matrix);

  // name is one of Sz, Sz2, Sx, Sy; the matrix is coupling times the operator.
  static Hamiltonian builtin(SpinLabel label, std::string_view name, double coupling);

  const SpinLabel& label() const noexcept { return label_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return cache_->matrix; }

  // h_n for n = 0..2S; h_n has degree at most 2S + n.
  const std::vector<Poly>& symbol() const noexcept { return cache_->symbol; }

  const Eigen::VectorXd& eigenvalues() const noexcept { return cache_->eigenvalues; }
  const Eigen::MatrixXcd& eigenvectors() const noexcept { return cache_->eigenvectors; }
  double spectral_norm() const noexcept { return cache_->spectral_norm; }

  // Stellar function of H psi given the stellar function of psi, via the matrix.
  Poly apply(const Poly& f) const;
  // Same through the symbol; agrees with apply() up to rounding.
  Poly apply_symbol(const Poly& f) const;

  // U H U^dagger.
  Hamiltonian transformed(const Eigen::MatrixXcd& unitary) const;

 private:
  struct Cache {
    Eigen::MatrixXcd matrix;
    std::vector<Poly> symbol;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
    double spectral_norm = 0.0;
  };

  SpinLabel label_;
  std::shared_ptr<const Cache> cache_;
};

const std::vector<Poly>& differential_symbol(const Hamiltonian& h);

// Coefficient maps between amplitudes and stellar-function coefficients
// (no normalization).
Poly amplitudes_to_poly(SpinLabel label, const Eigen::VectorXcd& psi);
Eigen::VectorXcd poly_to_amplitudes(SpinLabel label, const Poly& f);

}  // namespace majorana
