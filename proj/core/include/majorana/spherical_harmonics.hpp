#pragma once

#include <complex>
#include <vector>

#include "majorana/sphere.hpp"

namespace majorana {

// Orthonormal Y_Kq with the Condon-Shortley phase. Throws RangeError unless
// K >= 0 and |q| <= K.
std::complex<double> spherical_harmonic(int K, int q, const SpherePoint& p);

// Normalized associated Legendre values Pbar_K^m(cos theta) for K = m..max_K,
// scaled so that Y_Km = Pbar_K^m e^{i m phi}.
std::vector<double> normalized_legendre(int max_K, int m, double theta);

}  // namespace majorana
