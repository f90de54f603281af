#include "majorana/spherical_harmonics.hpp"

#include <cmath>
#include <numbers>

#include "majorana/errors.hpp"

namespace majorana {

std::vector<double> normalized_legendre(int max_K, int m, double theta) {
  std::vector<double> out;
  if (m < 0 || max_K < m) return out;
  const double x = std::cos(theta);
  const double s = std::sin(theta);
  // Pbar_m^m = (-1)^m sqrt((2m+1)/(4 pi) prod_{i=1}^m (2i-1)/(2i)) sin^m(theta).
  double pmm = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int i = 1; i <= m; ++i) pmm *= -s * std::sqrt((2.0 * i + 1.0) / (2.0 * i));
  out.push_back(pmm);
  if (max_K == m) return out;
  double pm1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
  out.push_back(pm1);
  double pm2 = pmm;
  for (int l = m + 2; l <= max_K; ++l) {
    const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
    const double b = std::sqrt((static_cast<double>(l - 1) * (l - 1) - static_cast<double>(m) * m) /
                               (4.0 * (l - 1) * (l - 1) - 1.0));
    const double pl = a * (x * pm1 - b * pm2);
    out.push_back(pl);
    pm2 = pm1;
    pm1 = pl;
  }
  return out;
}

std::complex<double> spherical_harmonic(int K, int q, const SpherePoint& p) {
  if (K < 0 || std::abs(q) > K) throw RangeError("spherical harmonic needs K >= 0 and |q| <= K");
  const int m = std::abs(q);
  const double plm = normalized_legendre(K, m, p.theta()).back();
  const std::complex<double> y = plm * std::polar(1.0, m * p.phi());
  if (q >= 0) return y;
  // Y_{K,-m} = (-1)^m conj(Y_{K,m}).
  return (m % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

}  // namespace majorana
