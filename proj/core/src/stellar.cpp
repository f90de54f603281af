#include "majorana/stellar.hpp"

#include <cmath>
#include <numbers>

#include "majorana/errors.hpp"
#include "majorana/polynomial.hpp"

namespace majorana {
namespace {

std::vector<double> sqrt_binomials(int two_s) {
  std::vector<double> out(static_cast<std::size_t>(two_s + 1));
  for (int k = 0; k <= two_s; ++k) out[static_cast<std::size_t>(k)] = std::sqrt(binomial(two_s, k));
  return out;
}

SpinState state_from_coefficients(SpinLabel label, const std::vector<cplx>& f) {
  const std::vector<double> c = sqrt_binomials(label.two_s());
  std::vector<cplx> amps(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) amps[k] = f[k] / c[k];
  return SpinState(label, std::move(amps)).with_canonical_phase();
}

bool all_finite(const std::vector<cplx>& v) {
  for (const cplx& x : v) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

}  // namespace

StellarPolynomial::StellarPolynomial(SpinLabel label, std::vector<cplx> coefficients)
    : label_(label), coefficients_(std::move(coefficients)) {
  if (static_cast<int>(coefficients_.size()) != label_.dimension()) {
    throw InvalidArgument("stellar polynomial needs 2S+1 coefficients");
  }
  bool nonzero = false;
  for (const cplx& c : coefficients_) nonzero = nonzero || std::abs(c) > 0.0;
  if (!nonzero) throw InvalidArgument("stellar polynomial is identically zero");
}

cplx StellarPolynomial::operator()(cplx z) const { return poly_eval(coefficients_, z); }

Constellation::Constellation(SpinLabel label, std::vector<cplx> finite_roots, int infinity_count)
    : label_(label), finite_roots_(std::move(finite_roots)), infinity_count_(infinity_count) {
  if (infinity_count_ < 0) throw InvalidArgument("negative infinity_count");
  if (static_cast<int>(finite_roots_.size()) + infinity_count_ != label_.two_s()) {
    throw InvalidArgument("constellation has " +
                          std::to_string(finite_roots_.size() + static_cast<std::size_t>(infinity_count_)) +
                          " stars, expected 2S = " + std::to_string(label_.two_s()));
  }
  if (!all_finite(finite_roots_)) throw InvalidArgument("non-finite root in constellation");
}

Constellation Constellation::from_stars(SpinLabel label, std::span<const SpherePoint> stars) {
  std::vector<cplx> roots;
  int infinity = 0;
  for (const SpherePoint& p : stars) {
    const ExtendedComplex z = sphere_to_stereo(p);
    if (z.is_infinite() || !std::isfinite(std::abs(z.value()))) {
      ++infinity;
    } else {
      roots.push_back(z.value());
    }
  }
  return Constellation(label, std::move(roots), infinity);
}

std::vector<ExtendedComplex> Constellation::stars() const {
  std::vector<ExtendedComplex> out(finite_roots_.begin(), finite_roots_.end());
  out.insert(out.end(), static_cast<std::size_t>(infinity_count_), ExtendedComplex::infinity());
  return out;
}

std::vector<SpherePoint> Constellation::sphere_points() const {
  std::vector<SpherePoint> out;
  for (const ExtendedComplex& z : stars()) out.push_back(stereo_to_sphere(z));
  return out;
}

std::vector<Vec3> Constellation::unit_vectors() const {
  std::vector<Vec3> out;
  for (const ExtendedComplex& z : stars()) out.push_back(stereo_to_unit_vector(z));
  return out;
}

StellarPolynomial stellar_polynomial(const SpinState& state) {
  const std::vector<double> c = sqrt_binomials(state.two_s());
  std::vector<cplx> f(static_cast<std::size_t>(state.dimension()));
  for (int k = 0; k < state.dimension(); ++k) f[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] * state[k];
  return StellarPolynomial(state.label(), std::move(f));
}

SpinState state_from_polynomial(const StellarPolynomial& poly) {
  const std::vector<cplx> f(poly.coefficients().begin(), poly.coefficients().end());
  const std::vector<double> c = sqrt_binomials(poly.label().two_s());
  std::vector<cplx> amps(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) amps[k] = f[k] / c[k];
  return SpinState(poly.label(), std::move(amps));
}

Constellation constellation_from_state(const SpinState& state, const RootOptions& options) {
  const StellarPolynomial f = stellar_polynomial(state);
  RootResult r = find_roots(f.coefficients(), options);
  return Constellation(state.label(), std::move(r.roots), r.degree_deficiency);
}

SpinState state_from_constellation(const Constellation& constellation) {
  const SpinLabel label = constellation.label();
  const std::span<const cplx> roots = constellation.finite_roots();
  const std::vector<cplx> e = elementary_symmetric(roots);
  const int r = static_cast<int>(roots.size());
  // f_k = (-1)^{r-k} e_{r-k} for k <= r; the top infinity_count vanish.
  std::vector<cplx> f(static_cast<std::size_t>(label.dimension()));
  for (int k = 0; k <= r; ++k) {
    const cplx ek = e[static_cast<std::size_t>(r - k)];
    f[static_cast<std::size_t>(k)] = ((r - k) % 2 == 0) ? ek : -ek;
  }
  if (!all_finite(f)) return state_from_sphere_points(label, constellation.sphere_points());
  return state_from_coefficients(label, f);
}

SpinState state_from_sphere_points(SpinLabel label, std::span<const SpherePoint> stars) {
  if (static_cast<int>(stars.size()) != label.two_s()) {
    throw InvalidArgument("need exactly 2S stars");
  }
  std::vector<cplx> f{cplx(1.0)};
  for (const SpherePoint& p : stars) {
    const double half = 0.5 * p.theta();
    const std::array<cplx, 2> factor{-std::polar(std::sin(half), -p.phi()), cplx(std::cos(half))};
    f = poly_multiply(f, factor);
  }
  return state_from_coefficients(label, f);
}

SpinState coherent_state(SpinLabel label, const ExtendedComplex& z0) {
  const int n = label.two_s();
  if (z0.is_infinite()) return basis_state(label, n);
  const cplx z = z0.value();
  const std::vector<double> c = sqrt_binomials(n);
  std::vector<cplx> amps(static_cast<std::size_t>(n + 1));
  if (std::abs(z) <= 1.0) {
    cplx power(1.0);
    for (int k = 0; k <= n; ++k) {
      amps[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] * power;
      power *= z;
    }
  } else {
    // z^k = z^{2S} w^{2S-k}; keep the phase of z^{2S}, drop its modulus.
    const cplx w = 1.0 / z;
    const cplx phase = std::pow(z / std::abs(z), n);
    cplx power(1.0);
    for (int k = n; k >= 0; --k) {
      amps[static_cast<std::size_t>(k)] = phase * c[static_cast<std::size_t>(k)] * power;
      power *= w;
    }
  }
  return SpinState(label, std::move(amps));
}

SpinState coherent_state(SpinLabel label, const SpherePoint& direction) {
  const int n = label.two_s();
  const std::vector<double> c = sqrt_binomials(n);
  const double s = std::sin(0.5 * direction.theta());
  const double co = std::cos(0.5 * direction.theta());
  std::vector<cplx> amps(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    amps[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] * std::pow(s, k) *
                                        std::pow(co, n - k) * std::polar(1.0, -k * direction.phi());
  }
  return SpinState(label, std::move(amps));
}

ExtendedComplex mobius_apply(const Eigen::Matrix2cd& u, const ExtendedComplex& z) {
  Eigen::Vector2cd spinor;
  if (z.is_infinite()) {
    spinor << 1.0, 0.0;
  } else if (std::abs(z.value()) <= 1.0) {
    spinor << -z.value(), 1.0;
  } else {
    spinor << -1.0, 1.0 / z.value();
  }
  const Eigen::Vector2cd v = u * spinor;
  if (std::abs(v(1)) <= 1e-300 * std::abs(v(0)) || v(1) == cplx{}) return ExtendedComplex::infinity();
  return cplx(-v(0) / v(1));
}

Constellation rotate(const Constellation& constellation, double theta, double phi) {
  const Eigen::MatrixXcd d = rotation_matrix(SpinLabel(1), theta, phi);
  const Eigen::Matrix2cd u = d;
  std::vector<cplx> roots;
  int infinity = 0;
  for (const ExtendedComplex& z : constellation.stars()) {
    const ExtendedComplex w = mobius_apply(u, z);
    if (w.is_infinite()) {
      ++infinity;
    } else {
      roots.push_back(w.value());
    }
  }
  return Constellation(constellation.label(), std::move(roots), infinity);
}

}  // namespace majorana
