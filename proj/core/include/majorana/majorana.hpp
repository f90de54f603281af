#pragma once

#include "majorana/clebsch_gordan.hpp"
#include "majorana/dynamics.hpp"
#include "majorana/errors.hpp"
#include "majorana/hamiltonian.hpp"
#include "majorana/io.hpp"
#include "majorana/kings.hpp"
#include "majorana/matching.hpp"
#include "majorana/multipoles.hpp"
#include "majorana/optimize.hpp"
#include "majorana/polynomial.hpp"
#include "majorana/quadrature.hpp"
#include "majorana/random.hpp"
#include "majorana/roots.hpp"
#include "majorana/sphere.hpp"
#include "majorana/spherical_harmonics.hpp"
#include "majorana/spin.hpp"
#include "majorana/stellar.hpp"
