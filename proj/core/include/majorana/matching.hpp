#pragma once

#include <vector>

#include <Eigen/Dense>

#include "majorana/sphere.hpp"

namespace majorana {

// Minimum-cost perfect assignment for a square cost matrix (Hungarian method).
// Returns column[row].
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

// Reorders `next` so that next[i] is the star assigned to reference[i] under
// minimal total chordal distance. Both lists must have equal length.
std::vector<ExtendedComplex> match_stars(const std::vector<ExtendedComplex>& reference,
                                         const std::vector<ExtendedComplex>& next);

// Largest chordal distance between matched stars.
double matched_distance(const std::vector<ExtendedComplex>& a, const std::vector<ExtendedComplex>& b);

}  // namespace majorana
