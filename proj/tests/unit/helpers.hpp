#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "majorana/majorana.hpp"

namespace testing {

using majorana::cplx;

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Greedy-free multiset distance via optimal matching on |z - w|.
inline double multiset_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  REQUIRE(a.size() == b.size());
  Eigen::MatrixXd cost(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::abs(a[i] - b[j]);
  const auto col = majorana::min_cost_assignment(cost);
  double worst = 0.0;
  for (std::size_t i = 0; i < col.size(); ++i) worst = std::max(worst, cost(static_cast<Eigen::Index>(i), col[i]));
  return worst;
}

inline std::vector<cplx> roots_of(const majorana::Constellation& c) {
  return {c.finite_roots().begin(), c.finite_roots().end()};
}

inline double lf(int n) { return std::lgamma(n + 1.0); }

// Racah formula in plain floating point (doubled arguments), used as an
// independent check of the exact-rational implementation.
inline double racah_double(int j1, int m1, int j2, int m2, int J, int M) {
  if (m1 + m2 != M) return 0.0;
  const int a = (j1 + j2 - J) / 2, b = (j1 - j2 + J) / 2, c = (-j1 + j2 + J) / 2;
  const double pre = 0.5 * (std::log(J + 1.0) + lf(a) + lf(b) + lf(c) - lf((j1 + j2 + J) / 2 + 1) +
                            lf((j1 + m1) / 2) + lf((j1 - m1) / 2) + lf((j2 + m2) / 2) + lf((j2 - m2) / 2) +
                            lf((J + M) / 2) + lf((J - M) / 2));
  double sum = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const int d[5] = {a - k, (j1 - m1) / 2 - k, (j2 + m2) / 2 - k, (J - j2 + m1) / 2 + k, (J - j1 - m2) / 2 + k};
    if (d[0] < 0 || d[1] < 0 || d[2] < 0) break;
    if (d[3] < 0 || d[4] < 0) continue;
    const double t = std::exp(pre - lf(k) - lf(d[0]) - lf(d[1]) - lf(d[2]) - lf(d[3]) - lf(d[4]));
    sum += (k % 2 ? -t : t);
  }
  return sum;
}


}  // namespace testing
