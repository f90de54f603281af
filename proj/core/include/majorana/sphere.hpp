#pragma once

#include <array>
#include <complex>

namespace majorana {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

// Point on the unit sphere. theta is clamped to [0, pi], phi reduced to [0, 2 pi).
class SpherePoint {
 public:
  SpherePoint() = default;
  SpherePoint(double theta, double phi);

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  Vec3 unit_vector() const;
  static SpherePoint from_unit_vector(const Vec3& v);

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

// A point of the extended complex plane: either finite or the point at infinity.
class ExtendedComplex {
 public:
  ExtendedComplex(cplx z) : value_(z) {}  // NOLINT(google-explicit-constructor)
  ExtendedComplex(double x) : value_(x, 0.0) {}  // NOLINT(google-explicit-constructor)

  static ExtendedComplex infinity() {
    ExtendedComplex e(cplx{});
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  // Meaningless when is_infinite().
  cplx value() const noexcept { return value_; }

 private:
  cplx value_;
  bool infinite_ = false;
};

// z = tan(theta/2) exp(-i phi): stereographic projection from the south pole.
SpherePoint stereo_to_sphere(cplx z);
SpherePoint stereo_to_sphere(const ExtendedComplex& z);
ExtendedComplex sphere_to_stereo(const SpherePoint& p);

// Unit vector of a star given by its stereographic coordinate.
Vec3 stereo_to_unit_vector(const ExtendedComplex& z);

double chordal_distance(const Vec3& a, const Vec3& b);
double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b);

}  // namespace majorana
