#pragma once

// Independent brute-force oracle used to pin expected values. Everything here
// recomputes from first principles with naive algorithms: plain rational
// Gaussian elimination (no fraction-free tricks), term-by-term derivation-rule
// expansion with explicit bubble-sort signs, and full symbolic expansion of
// the top-power polynomial with one variable per closed 2-form. None of it
// calls the engine's wedge/elimination paths.

#include <map>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/symplectic.hpp"

namespace oracle {

using Key = std::vector<int>;  // strictly increasing generator indices

/// Parity of sorting v (0 when v has duplicates); v is sorted in place.
int sort_sign(std::vector<int>& v);

/// Rank by textbook Gaussian elimination over Q.
int naive_rank(std::vector<std::vector<liecoh::Rat>> rows);

/// Differential of a basis monomial by the raw derivation rule.
std::map<Key, liecoh::Rat> d_monomial(const liecoh::LieAlgebra& L, const Key& I);

std::vector<long> betti(const liecoh::LieAlgebra& L);

/// Verdict by full symbolic expansion of (sum lambda_i sigma_i)^{n/2} over an
/// independently computed kernel basis.
liecoh::SymplecticVerdict symplectic_verdict(const liecoh::LieAlgebra& L);

}  // namespace oracle
