#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "liecoh/form.hpp"
#include "liecoh/rat_matrix.hpp"

namespace liecoh {

/// Third value of the completely-solvable verdict: the sampled eigenvalue
/// tests are necessary conditions only, so a non-nilpotent solvable algebra
/// is never fully certified.
enum class CompletelySolvable { CertifiedYes, NecessaryConditionsPass, No };

struct StructureReport {
    bool jacobi_ok = false;
    bool nilpotent = false;
    int nilpotency_class = 0;  // meaningful when nilpotent
    bool solvable = false;
    int derived_length = 0;  // meaningful when solvable
    CompletelySolvable completely_solvable = CompletelySolvable::No;
    bool unimodular = false;
};

const char* to_string(CompletelySolvable v);

/// A finite-dimensional Lie algebra over Q given by structure constants.
///
/// Internally the algebra stores the differentials d e^k of its generators;
/// the tuple notation of the catalog stores d e^k literally, and brackets
/// are recovered by duality: c^k_ij is the coefficient of e^i^e^j in -d e^k.
/// Antisymmetry is structural (only i<j labels exist); the Jacobi identity
/// is checked at construction and queried via check_jacobi().
class LieAlgebra {
public:
    /// differentials[k-1] is d e^k, a degree-2 form in ambient dimension n.
    static LieAlgebra from_differentials(std::vector<Form> differentials, std::string name = "");

    /// Parses the tuple grammar, e.g. "(0,0,12)" or "(16+35,-26+45,36,-46,0,0)".
    /// Each slot k lists d e^k as signed terms c*ij (single-digit indices) or
    /// c*(i,j) (required past index 9). Throws CatalogError with a column
    /// offset on malformed input.
    static LieAlgebra parse(std::string_view tuple_text, std::string name = "");

    int dim() const { return n_; }
    const std::string& name() const { return name_; }

    const Form& generator_differential(int k) const;  // d e^k, k in 1..n
    const Form& bracket(int i, int j) const;          // [e_i, e_j], i < j
    Form bracket_of(const Form& v, const Form& w) const;  // bilinear, degree-1 args

    /// Triples i<j<k violating [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
    const std::vector<std::tuple<int, int, int>>& check_jacobi() const { return jacobi_violations_; }
    bool jacobi_ok() const { return jacobi_violations_.empty(); }
    /// Throws std::domain_error when the Jacobi identity fails.
    void require_jacobi() const;

    /// Chevalley-Eilenberg differential: d e^k = -sum c^k_ij e^i^e^j on
    /// generators, extended as a degree +1 graded derivation.
    Form ce_differential(const Form& a) const;

    /// Matrix of ad(v): w -> [v, w] in the generator basis; v must have degree 1.
    RatMatrix ad(const Form& v) const;

    StructureReport structure_report() const;

    std::string to_tuple_string() const;

private:
    int n_ = 0;
    std::string name_;
    std::vector<Form> dgen_;                        // d e^k at index k-1
    std::map<std::pair<int, int>, Form> brackets_;  // (i,j) with i<j -> [e_i,e_j]
    std::vector<std::tuple<int, int, int>> jacobi_violations_;
};

/// Block sum: generators of b are shifted past those of a. Used for the
/// product-of-models computations (Betti vectors convolve).
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace liecoh
