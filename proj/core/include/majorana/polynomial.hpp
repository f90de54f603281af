#pragma once

#include <complex>
#include <span>
#include <vector>

namespace majorana {

using cplx = std::complex<double>;

// Polynomials are coefficient lists in ascending powers: c[0] + c[1] z + ...

cplx poly_eval(std::span<const cplx> coeffs, cplx z);

// p(z) and p'(z) together.
struct PolyValue {
  cplx value;
  cplx derivative;
};
PolyValue poly_eval_with_derivative(std::span<const cplx> coeffs, cplx z);

// Taylor coefficients p^{(j)}(z)/j! for j = 0..count-1.
std::vector<cplx> poly_taylor(std::span<const cplx> coeffs, cplx z, int count);

// Newton correction p(z)/p'(z), evaluated through the reversed polynomial when
// |z| > 1 to stay finite for large arguments.
cplx newton_ratio(std::span<const cplx> coeffs, cplx z);

// Sum_k |c_k| |z|^k, the scale against which a residual |p(z)| is judged.
double poly_magnitude(std::span<const cplx> coeffs, double abs_z);

std::vector<cplx> poly_derivative(std::span<const cplx> coeffs, int order = 1);
std::vector<cplx> poly_multiply(std::span<const cplx> a, std::span<const cplx> b);
void poly_add_scaled(std::vector<cplx>& acc, std::span<const cplx> p, cplx scale, int shift = 0);

// e_0..e_n of the given roots, built one root at a time.
std::vector<cplx> elementary_symmetric(std::span<const cplx> roots);

}  // namespace majorana
