#include "majorana/polynomial.hpp"

#include <cmath>

namespace majorana {

cplx poly_eval(std::span<const cplx> coeffs, cplx z) {
  cplx acc{};
  for (auto k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

PolyValue poly_eval_with_derivative(std::span<const cplx> coeffs, cplx z) {
  cplx p{};
  cplx dp{};
  for (auto k = coeffs.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[k];
  }
  return {p, dp};
}

std::vector<cplx> poly_taylor(std::span<const cplx> coeffs, cplx z, int count) {
  // Repeated synthetic division by (x - z).
  std::vector<cplx> work(coeffs.begin(), coeffs.end());
  std::vector<cplx> out;
  const int n = static_cast<int>(work.size());
  for (int j = 0; j < count; ++j) {
    if (j >= n) {
      out.emplace_back();
      continue;
    }
    for (int k = n - 2; k >= j; --k) work[static_cast<std::size_t>(k)] += z * work[static_cast<std::size_t>(k + 1)];
    out.push_back(work[static_cast<std::size_t>(j)]);
  }
  return out;
}

cplx newton_ratio(std::span<const cplx> coeffs, cplx z) {
  if (std::abs(z) <= 1.0) {
    const PolyValue v = poly_eval_with_derivative(coeffs, z);
    return v.value / v.derivative;
  }
  // p(z) = z^n q(w) with w = 1/z and q the reversed polynomial.
  const int n = static_cast<int>(coeffs.size()) - 1;
  const cplx w = 1.0 / z;
  cplx q{};
  cplx dq{};
  for (int k = 0; k <= n; ++k) {
    dq = dq * w + q;
    q = q * w + coeffs[static_cast<std::size_t>(k)];
  }
  return z * q / (static_cast<double>(n) * q - w * dq);
}

double poly_magnitude(std::span<const cplx> coeffs, double abs_z) {
  double acc = 0.0;
  for (auto k = coeffs.size(); k-- > 0;) acc = acc * abs_z + std::abs(coeffs[k]);
  return acc;
}

std::vector<cplx> poly_derivative(std::span<const cplx> coeffs, int order) {
  std::vector<cplx> out(coeffs.begin(), coeffs.end());
  for (int o = 0; o < order; ++o) {
    if (out.size() <= 1) return {cplx{}};
    for (std::size_t k = 1; k < out.size(); ++k) out[k - 1] = static_cast<double>(k) * out[k];
    out.pop_back();
  }
  return out;
}

std::vector<cplx> poly_multiply(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<cplx> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_add_scaled(std::vector<cplx>& acc, std::span<const cplx> p, cplx scale, int shift) {
  const std::size_t need = p.size() + static_cast<std::size_t>(shift);
  if (acc.size() < need) acc.resize(need);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + static_cast<std::size_t>(shift)] += scale * p[k];
}

std::vector<cplx> elementary_symmetric(std::span<const cplx> roots) {
  std::vector<cplx> e{cplx(1.0)};
  e.reserve(roots.size() + 1);
  for (const cplx& r : roots) {
    e.emplace_back();
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += r * e[j - 1];
  }
  return e;
}

}  // namespace majorana
