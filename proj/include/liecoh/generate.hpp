#pragma once

#include <random>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Random filtered nilpotent algebra: slot k receives a random combination
/// of cocycles of the algebra already built on generators 1..k-1, so the
/// construction is nilpotent and satisfies the Jacobi identity by design.
/// density is the per-cocycle inclusion probability in percent.
LieAlgebra random_filtered_algebra(std::mt19937_64& rng, int dim, int density_percent = 40,
                                   int coeff_bound = 2);

/// Perturbs one generator differential until the Jacobi identity breaks.
/// Throws std::runtime_error if no violation is found (dim < 3 inputs).
LieAlgebra inject_jacobi_violation(std::mt19937_64& rng, const LieAlgebra& L);

}  // namespace liecoh
