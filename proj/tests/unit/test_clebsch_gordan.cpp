#include "helpers.hpp"

using namespace majorana;

using testing::racah_double;

TEST_CASE("documented values") {
  CHECK(clebsch_gordan(1, 1, 1, -1, 2, 0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(clebsch_gordan(1, 1, 1, 1, 2, 0) == 0.0);
  for (int two_j = 1; two_j <= 8; ++two_j) CHECK(clebsch_gordan(two_j, two_j, two_j, two_j, 2 * two_j, 2 * two_j) == 1.0);
  CHECK(clebsch_gordan(2, 0, 2, 0, 2, 0) == 0.0);
  CHECK(clebsch_gordan(2, 0, 2, 0, 4, 0) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(clebsch_gordan(2, 0, 2, 0, 0, 0) == doctest::Approx(-std::sqrt(1.0 / 3.0)));
  CHECK(clebsch_gordan(2, 2, 2, 2, 0, 0) == 0.0);
}

TEST_CASE("agrees with the floating-point Racah sum") {
  double worst = 0.0;
  for (int j1 = 0; j1 <= 8; ++j1)
    for (int j2 = 0; j2 <= 8; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            const int M = m1 + m2;
            if (std::abs(M) > J) continue;
            worst = std::max(worst, std::abs(clebsch_gordan(j1, m1, j2, m2, J, M) - racah_double(j1, m1, j2, m2, J, M)));
          }
  CHECK(worst < 1e-12);
}

TEST_CASE("orthogonality over m1, m2") {
  const int j1 = 5, j2 = 4;
  for (int J = 1; J <= 9; J += 2)
    for (int Jp = 1; Jp <= 9; Jp += 2) {
      const int M = 1;
      if (M > J || M > Jp) continue;
      double s = 0.0;
      for (int m1 = -j1; m1 <= j1; m1 += 2) {
        const int m2 = M - m1;
        if (std::abs(m2) > j2) continue;
        s += clebsch_gordan(j1, m1, j2, m2, J, M) * clebsch_gordan(j1, m1, j2, m2, Jp, M);
      }
      CHECK(std::abs(s - (J == Jp ? 1.0 : 0.0)) < 1e-14);
    }
}
