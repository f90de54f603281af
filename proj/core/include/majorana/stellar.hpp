#pragma once

#include <complex>
#include <span>
#include <vector>

#include "majorana/roots.hpp"
#include "majorana/sphere.hpp"
#include "majorana/spin.hpp"

namespace majorana {

// Majorana stellar function f(z) = sum_k binom(2S,k)^{1/2} psi_{k-S} z^k.
class StellarPolynomial {
 public:
  StellarPolynomial(SpinLabel label, std::vector<cplx> coefficients);

  const SpinLabel& label() const noexcept { return label_; }
  std::span<const cplx> coefficients() const noexcept { return coefficients_; }
  cplx operator()(cplx z) const;

 private:
  SpinLabel label_;
  std::vector<cplx> coefficients_;
};

// Multiset of 2S stars: finite stereographic roots plus stars at z = infinity
// (south pole). Multiple stars are listed repeatedly.
class Constellation {
 public:
  // Throws InvalidArgument unless roots.size() + infinity_count == 2S and all
  // roots are finite.
  Constellation(SpinLabel label, std::vector<cplx> finite_roots, int infinity_count);

  // Angular form; stars with theta == pi become stars at infinity.
  static Constellation from_stars(SpinLabel label, std::span<const SpherePoint> stars);

  const SpinLabel& label() const noexcept { return label_; }
  std::span<const cplx> finite_roots() const noexcept { return finite_roots_; }
  int infinity_count() const noexcept { return infinity_count_; }
  int size() const noexcept { return label_.two_s(); }

  // Finite stars first (in root order), then stars at infinity.
  std::vector<ExtendedComplex> stars() const;
  std::vector<SpherePoint> sphere_points() const;
  std::vector<Vec3> unit_vectors() const;

 private:
  SpinLabel label_;
  std::vector<cplx> finite_roots_;
  int infinity_count_;
};

StellarPolynomial stellar_polynomial(const SpinState& state);
SpinState state_from_polynomial(const StellarPolynomial& poly);

Constellation constellation_from_state(const SpinState& state, const RootOptions& options = {});

// Vieta reconstruction, normalized, with the highest nonzero amplitude made
// real positive.
SpinState state_from_constellation(const Constellation& constellation);

// Same state built from star directions as a product of homogeneous linear
// factors cos(theta/2) z - sin(theta/2) e^{-i phi}; stable for stars at or
// near the south pole. Used by the optimizer.
SpinState state_from_sphere_points(SpinLabel label, std::span<const SpherePoint> stars);

// Normalized coherent state |z0>; z0 = infinity gives |S,S>.
SpinState coherent_state(SpinLabel label, const ExtendedComplex& z0);
SpinState coherent_state(SpinLabel label, const SpherePoint& direction);

// Stars that leave the state invariant under the rotation; moves each star
// through the spin-1/2 representation of D(theta, phi).
Constellation rotate(const Constellation& constellation, double theta, double phi);

// Mobius action of a 2x2 unitary on stereographic coordinates: the image of
// the star whose spin-1/2 state is (-z, 1).
ExtendedComplex mobius_apply(const Eigen::Matrix2cd& u, const ExtendedComplex& z);

}  // namespace majorana
