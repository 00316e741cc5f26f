#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/symplectic.hpp"

namespace liecoh {

/// Flags a profile cannot derive from Betti data alone. Hypotheses the tool
/// cannot verify (lattice existence, asserted asphericity) are recorded as
/// explicit assertions, never inferred.
struct GroupFlags {
    bool nilpotent = false;
    bool torsion_free = false;
    bool type_r_asserted = false;
    bool lattice_asserted = false;
    bool orientable_model = false;
    /// The model carries an invariant symplectic structure (verified verdict
    /// or explicit assertion).
    bool symplectic_model = false;
    /// The group is asserted/derived to be the fundamental group of a closed
    /// symplectically aspherical manifold.
    bool aspherical_asserted = false;
    std::optional<CompletelySolvable> completely_solvable;
};

/// Betti data plus structural flags for one group; the unit of classification.
struct GroupProfile {
    std::vector<long> betti;      // b_0, b_1, ...
    std::optional<int> dim_model;  // dimension of a realizing closed model
    GroupFlags flags;
    std::string source;

    /// b_k, with indices past the stored vector reading as 0.
    long b(int k) const;
};

/// Profile of the fundamental group of the nilmanifold/solvmanifold model of
/// an algebra: Betti numbers of the algebra, flags from the structure report
/// and the symplectic verdict, lattice existence from the caller's assertion.
GroupProfile profile_from_algebra(const LieAlgebra& L, const StructureReport& structure,
                                  const SymplecticReport& symplectic, bool lattice_asserted,
                                  std::string source = "");

enum class CriterionId {
    A2nMember,
    BMember,
    NotA4,
    DimBound,
    EulerRelation,
    Inequality26,
    Rank4Criterion,
    NuBound,
    ProductB3,    // product rule: max b3 >= 1
    ProductB2B1,  // product rule: max b2 >= 2 and max b1 >= 1
    ProductZ4,    // product rule: one factor has the rank-4 torus Betti data
};

enum class CriterionVerdict { Fired, NotFired, NotEvaluable };
enum class CriterionTag { Necessary, Sufficient, Consistency };

const char* to_string(CriterionId id);
const char* to_string(CriterionVerdict v);
const char* to_string(CriterionTag t);

struct CriterionResult {
    CriterionId id;
    CriterionVerdict verdict;
    CriterionTag tag;
    std::string justification;  // cites the input numbers
};

struct ClassEvidence {
    std::vector<CriterionResult> verdicts;
    std::vector<std::string> notes;  // surfaced open questions, inconsistencies

    const CriterionResult* find(CriterionId id) const;
    bool fired(CriterionId id) const;
};

/// Evaluates the class-membership criteria on one profile. Verdicts are
/// tagged NECESSARY / SUFFICIENT / CONSISTENCY; the tool never claims more
/// than the criteria license.
ClassEvidence classify(const GroupProfile& p);

/// Product profile: Betti convolution, conjoined flags, summed model dims.
GroupProfile kunneth(const GroupProfile& p, const GroupProfile& q);

/// Product criteria for two asserted symplectically aspherical groups; fires
/// B_MEMBER on the product and cross-checks the firing against b1 < b3 of
/// the Kunneth profile.
ClassEvidence product_criteria(const GroupProfile& p, const GroupProfile& q);

enum class Membership { Member, NonMember, Unknown };

struct DimensionEvidence {
    int dim = 0;                              // even model dimension
    Membership in_a = Membership::Unknown;    // trivial-pi2 class at this dimension
    Membership in_b = Membership::Unknown;    // nontrivial-pi2 class at this dimension
    std::string note;
};

struct ChainReport {
    std::vector<std::string> implied;     // memberships forced by the inclusion chains
    std::vector<std::string> violations;  // input-data inconsistencies, never reconciled
    bool empty() const { return implied.empty() && violations.empty(); }
};

/// Consistency of recorded memberships with the descending inclusion chains
/// (membership at dimension 2n+2 implies membership at 2n, down to the
/// dimension-4 disjunction on the trivial-pi2 side).
ChainReport chain_report(const std::vector<DimensionEvidence>& evidence);

}  // namespace liecoh
