#include "majorana/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "majorana/errors.hpp"
#include "majorana/polynomial.hpp"

namespace majorana {

Poly amplitudes_to_poly(SpinLabel label, const Eigen::VectorXcd& psi) {
  const int n = label.two_s();
  Poly f(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) f[static_cast<std::size_t>(k)] = std::sqrt(binomial(n, k)) * psi(k);
  return f;
}

Eigen::VectorXcd poly_to_amplitudes(SpinLabel label, const Poly& f) {
  const int n = label.two_s();
  if (f.size() > static_cast<std::size_t>(n + 1)) throw InvalidArgument("polynomial degree exceeds 2S");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n + 1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    psi(static_cast<Eigen::Index>(k)) = f[k] / std::sqrt(binomial(n, static_cast<int>(k)));
  }
  return psi;
}

namespace {

std::vector<Poly> derive_symbol(SpinLabel label, const Eigen::MatrixXcd& h) {
  const int n = label.two_s();
  std::vector<Poly> symbol;
  symbol.reserve(static_cast<std::size_t>(n + 1));
  double factorial = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    Poly monomial(static_cast<std::size_t>(k + 1), cplx{});
    monomial[static_cast<std::size_t>(k)] = 1.0;
    Poly rest = amplitudes_to_poly(label, h * poly_to_amplitudes(label, monomial));
    // Subtract h_j(z) k!/(k-j)! z^{k-j} for the lower orders already known.
    double falling = 1.0;
    for (int j = 0; j < k; ++j) {
      poly_add_scaled(rest, symbol[static_cast<std::size_t>(j)], -falling, k - j);
      falling *= (k - j);
    }
    for (cplx& c : rest) c /= factorial;
    symbol.push_back(std::move(rest));
  }
  return symbol;
}

}  // namespace

Hamiltonian::Hamiltonian(SpinLabel label, Eigen::MatrixXcd matrix) : label_(label) {
  const int d = label.dimension();
  if (matrix.rows() != d || matrix.cols() != d) throw InvalidArgument("Hamiltonian has the wrong dimension");
  if (!matrix.allFinite()) throw InvalidArgument("Hamiltonian has non-finite entries");
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("Hamiltonian is not Hermitian");
  }
  auto cache = std::make_shared<Cache>();
  cache->matrix = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(cache->matrix);
  cache->eigenvalues = eig.eigenvalues();
  cache->eigenvectors = eig.eigenvectors();
  cache->spectral_norm = cache->eigenvalues.cwiseAbs().maxCoeff();
  cache->symbol = derive_symbol(label, cache->matrix);
  cache_ = std::move(cache);
}

Hamiltonian Hamiltonian::builtin(SpinLabel label, std::string_view name, double coupling) {
  if (!std::isfinite(coupling)) throw InvalidArgument("coupling must be finite");
  const SpinMatrices s = spin_matrices(label);
  Eigen::MatrixXcd m;
  if (name == "Sz") {
    m = s.sz;
  } else if (name == "Sz2") {
    m = s.sz * s.sz;
  } else if (name == "Sx") {
    m = s.sx;
  } else if (name == "Sy") {
    m = s.sy;
  } else {
    throw InvalidArgument("unknown builtin Hamiltonian '" + std::string(name) + "'");
  }
  return Hamiltonian(label, coupling * m);
}

Poly Hamiltonian::apply(const Poly& f) const {
  return amplitudes_to_poly(label_, matrix() * poly_to_amplitudes(label_, f));
}

Poly Hamiltonian::apply_symbol(const Poly& f) const {
  const int n = label_.two_s();
  Poly out(static_cast<std::size_t>(2 * n + 1), cplx{});
  Poly deriv = f;
  for (int j = 0; j <= n && !deriv.empty(); ++j) {
    const Poly term = poly_multiply(symbol()[static_cast<std::size_t>(j)], deriv);
    poly_add_scaled(out, term, 1.0);
    deriv = poly_derivative(deriv);
  }
  out.resize(static_cast<std::size_t>(n + 1));
  return out;
}

Hamiltonian Hamiltonian::transformed(const Eigen::MatrixXcd& unitary) const {
  Eigen::MatrixXcd m = unitary * matrix() * unitary.adjoint();
  m = 0.5 * (m + m.adjoint());
  return Hamiltonian(label_, std::move(m));
}

const std::vector<Poly>& differential_symbol(const Hamiltonian& h) { return h.symbol(); }

}  // namespace majorana
