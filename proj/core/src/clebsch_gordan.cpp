#include "majorana/clebsch_gordan.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

namespace majorana {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
  cpp_int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
  if (two_j1 < 0 || two_j2 < 0 || two_J < 0) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_M) > two_J) return 0.0;
  if (two_m1 + two_m2 != two_M) return 0.0;
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2) return 0.0;
  if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0 || (two_J + two_M) % 2 != 0) return 0.0;
  if ((two_j1 + two_j2 + two_J) % 2 != 0) return 0.0;

  const int a = (two_j1 + two_j2 - two_J) / 2;  // j1 + j2 - J
  const int b = (two_j1 - two_m1) / 2;          // j1 - m1
  const int c = (two_j2 + two_m2) / 2;          // j2 + m2
  const int d = (two_J - two_j2 + two_m1) / 2;  // J - j2 + m1
  const int e = (two_J - two_j1 - two_m2) / 2;  // J - j1 - m2

  cpp_rational sum = 0;
  const int k_min = std::max({0, -d, -e});
  const int k_max = std::min({a, b, c});
  for (int k = k_min; k <= k_max; ++k) {
    const cpp_int den = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                        factorial(d + k) * factorial(e + k);
    const cpp_rational term(cpp_int(1), den);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum == 0) return 0.0;

  const cpp_rational prefactor(
      cpp_int(two_J + 1) * factorial((two_J + two_j1 - two_j2) / 2) *
          factorial((two_J - two_j1 + two_j2) / 2) * factorial(a) * factorial((two_J + two_M) / 2) *
          factorial((two_J - two_M) / 2) * factorial((two_j1 - two_m1) / 2) *
          factorial((two_j1 + two_m1) / 2) * factorial((two_j2 - two_m2) / 2) *
          factorial((two_j2 + two_m2) / 2),
      factorial((two_j1 + two_j2 + two_J) / 2 + 1));
  const cpp_rational squared = prefactor * sum * sum;
  const double magnitude = std::sqrt(squared.convert_to<double>());
  return sum > 0 ? magnitude : -magnitude;
}

TensorTable::TensorTable(SpinLabel label) : label_(label) {
  const int two_s = label.two_s();
  const int n = label.dimension();
  const int max_K = two_s;
  data_.assign(static_cast<std::size_t>((max_K + 1) * (max_K + 1) * n), 0.0);
  for (int K = 0; K <= max_K; ++K) {
    const double norm = std::sqrt((2.0 * K + 1.0) / (two_s + 1.0));
    for (int q = -K; q <= K; ++q) {
      for (int k = 0; k < n; ++k) {
        const int two_m = 2 * k - two_s;
        data_[offset(K, q) + static_cast<std::size_t>(k)] =
            norm * clebsch_gordan(two_s, two_m, 2 * K, 2 * q, two_s, two_m + 2 * q);
      }
    }
  }
}

const TensorTable& TensorTable::get(SpinLabel label) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const TensorTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[label.two_s()];
  if (!slot) slot = std::make_unique<const TensorTable>(label);
  return *slot;
}

}  // namespace majorana
