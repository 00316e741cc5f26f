#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/cohomology.hpp"
#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Echelon-canonical basis of ker(d: Lambda^2 -> Lambda^3).
std::vector<Form> closed_two_forms(const LieAlgebra& L);

/// The coefficient of e^{1..n} in (sum_i lambda_i sigma_i)^{n/2}, expanded as
/// a polynomial in the lambda variables. Identically zero iff no linear
/// combination of the closed 2-forms has nonzero top power.
struct PfaffianPolynomial {
    int variables = 0;
    int degree = 0;                        // n/2, homogeneous
    std::map<std::vector<int>, Rat> expansion;  // exponent vector -> coefficient

    bool identically_zero() const { return expansion.empty(); }
};

PfaffianPolynomial pfaffian_polynomial(const LieAlgebra& L, const std::vector<Form>& sigmas);

enum class SymplecticVerdict { Symplectic, NotSymplectic, Unknown };
enum class SearchMethod { SymbolicExpansion, PointSearch };

const char* to_string(SymplecticVerdict v);
const char* to_string(SearchMethod m);

struct SymplecticReport {
    SymplecticVerdict verdict = SymplecticVerdict::Unknown;
    SearchMethod method = SearchMethod::SymbolicExpansion;
    std::optional<Form> witness;    // closed, with verified nonzero top power
    std::optional<Form> top_power;  // witness^{n/2}
    /// Set when the algebra is certified completely solvable; with a
    /// SYMPLECTIC verdict the witness class is then symplectically
    /// aspherical (the model has no spherical 2-cycles).
    bool aspherical_note = false;
    std::string reason;  // e.g. ODD_DIMENSION, or search diagnostics
};

struct SymplecticOptions {
    /// Full symbolic expansion is used when the closed-2-form count is at
    /// most this; above it a deterministic point search runs instead.
    int expansion_threshold = 12;
    /// Point-search budget per radius; radii grow 1, 2, 4, ... up to max_radius.
    int trials_per_radius = 512;
    int max_radius = 8;
};

/// Decides existence of an invariant symplectic structure: a closed 2-form
/// with nonzero top power. NOT_SYMPLECTIC is only certified by the
/// identically-zero Pfaffian polynomial; a failed point search yields UNKNOWN.
SymplecticReport find_symplectic(const LieAlgebra& L, const SymplecticOptions& opts = {});

/// Largest q such that some closed 2-form has a nonzero q-th cup power in
/// H^{2q}; 0 when H^2 vanishes. Upper bound for the realizable-dimension
/// invariant at the invariant-form level.
int cup_length_two(const LieAlgebra& L);

/// True iff cup products of degree-1 classes span H^2.
bool is_h2_decomposable(const LieAlgebra& L);

/// Scales by the lcm N of all coefficient denominators; returns (N*a, N).
std::pair<Form, Int> integralize(const Form& a);

}  // namespace liecoh
