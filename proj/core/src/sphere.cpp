#include "majorana/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace majorana {

SpherePoint::SpherePoint(double theta, double phi) {
  theta_ = std::clamp(theta, 0.0, std::numbers::pi);
  const double two_pi = 2.0 * std::numbers::pi;
  phi_ = std::fmod(phi, two_pi);
  if (phi_ < 0.0) phi_ += two_pi;
  if (phi_ >= two_pi) phi_ = 0.0;
}

Vec3 SpherePoint::unit_vector() const {
  const double s = std::sin(theta_);
  return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

SpherePoint SpherePoint::from_unit_vector(const Vec3& v) {
  const double rho = std::hypot(v[0], v[1]);
  return SpherePoint(std::atan2(rho, v[2]), std::atan2(v[1], v[0]));
}

SpherePoint stereo_to_sphere(cplx z) {
  // |z| = tan(theta/2), arg z = -phi.
  const double r = std::abs(z);
  const double theta = 2.0 * std::atan(r);
  const double phi = r > 0.0 ? -std::arg(z) : 0.0;
  return SpherePoint(theta, phi);
}

SpherePoint stereo_to_sphere(const ExtendedComplex& z) {
  if (z.is_infinite()) return SpherePoint(std::numbers::pi, 0.0);
  return stereo_to_sphere(z.value());
}

ExtendedComplex sphere_to_stereo(const SpherePoint& p) {
  if (p.theta() >= std::numbers::pi) return ExtendedComplex::infinity();
  return std::polar(std::tan(0.5 * p.theta()), -p.phi());
}

Vec3 stereo_to_unit_vector(const ExtendedComplex& z) {
  if (z.is_infinite()) return {0.0, 0.0, -1.0};
  // x - i y = 2 z / (1 + |z|^2) for z = tan(theta/2) e^{-i phi}.
  const cplx w = z.value();
  if (std::abs(w) <= 1.0) {
    const double r2 = std::norm(w);
    const double d = 1.0 + r2;
    return {2.0 * w.real() / d, -2.0 * w.imag() / d, (1.0 - r2) / d};
  }
  // Same map through u = 1/z, finite all the way to the south pole.
  const cplx u = 1.0 / w;
  const double r2 = std::norm(u);
  const double d = 1.0 + r2;
  return {2.0 * u.real() / d, 2.0 * u.imag() / d, (r2 - 1.0) / d};
}

double chordal_distance(const Vec3& a, const Vec3& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                   (a[2] - b[2]) * (a[2] - b[2]));
}

double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  return chordal_distance(stereo_to_unit_vector(a), stereo_to_unit_vector(b));
}

}  // namespace majorana
