#include "majorana/matching.hpp"

#include <algorithm>
#include <limits>

#include "majorana/errors.hpp"

namespace majorana {

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  const int n = static_cast<int>(cost.rows());
  if (cost.cols() != n) throw InvalidArgument("assignment needs a square cost matrix");
  if (n == 0) return {};
  constexpr double inf = std::numeric_limits<double>::infinity();
  // Potentials formulation with 1-based sentinels (row/column 0 is virtual).
  std::vector<double> u(static_cast<std::size_t>(n + 1), 0.0), v(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<int> p(static_cast<std::size_t>(n + 1), 0), way(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n + 1), inf);
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = p[static_cast<std::size_t>(j0)];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> col(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) col[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  return col;
}

namespace {

Eigen::MatrixXd chordal_costs(const std::vector<ExtendedComplex>& a, const std::vector<ExtendedComplex>& b) {
  if (a.size() != b.size()) throw InvalidArgument("star lists differ in length");
  const auto n = static_cast<Eigen::Index>(a.size());
  std::vector<Vec3> va, vb;
  for (const auto& z : a) va.push_back(stereo_to_unit_vector(z));
  for (const auto& z : b) vb.push_back(stereo_to_unit_vector(z));
  Eigen::MatrixXd cost(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      cost(i, j) = chordal_distance(va[static_cast<std::size_t>(i)], vb[static_cast<std::size_t>(j)]);
    }
  }
  return cost;
}

}  // namespace

std::vector<ExtendedComplex> match_stars(const std::vector<ExtendedComplex>& reference,
                                         const std::vector<ExtendedComplex>& next) {
  const std::vector<int> col = min_cost_assignment(chordal_costs(reference, next));
  std::vector<ExtendedComplex> out;
  out.reserve(next.size());
  for (int c : col) out.push_back(next[static_cast<std::size_t>(c)]);
  return out;
}

double matched_distance(const std::vector<ExtendedComplex>& a, const std::vector<ExtendedComplex>& b) {
  const Eigen::MatrixXd cost = chordal_costs(a, b);
  const std::vector<int> col = min_cost_assignment(cost);
  double worst = 0.0;
  for (std::size_t i = 0; i < col.size(); ++i) {
    worst = std::max(worst, cost(static_cast<Eigen::Index>(i), col[i]));
  }
  return worst;
}

}  // namespace majorana
