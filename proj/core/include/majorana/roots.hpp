#pragma once

#include <complex>
#include <span>
#include <vector>

namespace majorana {

using cplx = std::complex<double>;

struct RootOptions {
  // Accepted residual: |p(z)| <= residual_tol * max|c| * max(1,|z|)^n.
  double residual_tol = 1e-10;
  // Leading (and trailing) coefficients below infinity_tol * max|c| count as zero.
  double infinity_tol = 1e-12;
  // Roots closer than cluster_radius * (1 + |z|) merge into one multiple root.
  double cluster_radius = 1e-7;
  int max_iterations = 600;
};

enum class RootMethod { Trivial, Aberth, Companion };

struct RootResult {
  // Roots of the effective-degree polynomial, multiple roots repeated.
  std::vector<cplx> roots;
  // Number of leading coefficients truncated (roots at infinity).
  int degree_deficiency = 0;
  RootMethod method = RootMethod::Trivial;
};

// All roots of c[0] + c[1] z + ... + c[n] z^n. Simultaneous Aberth-Ehrlich
// iteration with a companion-matrix fallback, followed by multiplicity
// clustering. Throws NonConvergence when neither method meets the residual
// bound and InvalidArgument on the zero polynomial.
RootResult find_roots(std::span<const cplx> coeffs, const RootOptions& options = {});

// Aberth-Ehrlich only, no truncation or clustering; exposed for tests and
// benchmarks. Returns false if the residual bound was not met.
bool aberth_roots(std::span<const cplx> coeffs, std::vector<cplx>& roots, int max_iterations,
                  double residual_tol);

std::vector<cplx> companion_roots(std::span<const cplx> coeffs);

}  // namespace majorana
