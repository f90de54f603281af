#include "majorana/random.hpp"

#include <cmath>
#include <numbers>

namespace majorana {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

SpinState random_state(SpinLabel label, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<cplx> amps(static_cast<std::size_t>(label.dimension()));
  for (cplx& a : amps) a = cplx(normal(rng), normal(rng));
  return SpinState(label, std::move(amps));
}

SpherePoint random_sphere_point(Rng& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double cos_theta = 1.0 - 2.0 * uni(rng);
  const double phi = 2.0 * std::numbers::pi * uni(rng);
  return SpherePoint(std::acos(cos_theta), phi);
}

Eigen::MatrixXcd random_hermitian(int dimension, Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd h(dimension, dimension);
  for (int i = 0; i < dimension; ++i) {
    h(i, i) = normal(rng);
    for (int j = i + 1; j < dimension; ++j) {
      h(i, j) = cplx(normal(rng), normal(rng)) / std::numbers::sqrt2;
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace majorana
