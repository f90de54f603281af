#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "majorana/sphere.hpp"
#include "majorana/spin.hpp"

namespace majorana {

using Rng = std::mt19937_64;

// Independent stream for (seed, index); splitmix64 mixing keeps nearby
// indices uncorrelated.
Rng make_stream(std::uint64_t seed, std::uint64_t index);

// Haar-random pure state (normalized complex Gaussian vector).
SpinState random_state(SpinLabel label, Rng& rng);

// Uniformly distributed point on the sphere.
SpherePoint random_sphere_point(Rng& rng);

// GUE-distributed Hermitian matrix of the given dimension.
Eigen::MatrixXcd random_hermitian(int dimension, Rng& rng);

}  // namespace majorana
