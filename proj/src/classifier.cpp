#include "liecoh/classifier.hpp"

#include <algorithm>
#include <map>

namespace liecoh {

long GroupProfile::b(int k) const {
    if (k < 0 || k >= static_cast<int>(betti.size())) return 0;
    return betti[static_cast<std::size_t>(k)];
}

GroupProfile profile_from_algebra(const LieAlgebra& L, const StructureReport& structure,
                                  const SymplecticReport& symplectic, bool lattice_asserted,
                                  std::string source) {
    GroupProfile p;
    p.betti = betti(L);
    p.dim_model = L.dim();
    p.source = source.empty() ? L.name() : std::move(source);
    p.flags.nilpotent = structure.nilpotent;
    // a uniform lattice in a simply connected nilpotent group is torsion free
    p.flags.torsion_free = structure.nilpotent && lattice_asserted;
    p.flags.type_r_asserted = false;
    p.flags.lattice_asserted = lattice_asserted;
    p.flags.orientable_model = structure.unimodular;
    p.flags.symplectic_model = symplectic.verdict == SymplecticVerdict::Symplectic;
    p.flags.completely_solvable = structure.completely_solvable;
    p.flags.aspherical_asserted = lattice_asserted && p.flags.symplectic_model &&
                                  structure.completely_solvable == CompletelySolvable::CertifiedYes;
    return p;
}

const char* to_string(CriterionId id) {
    switch (id) {
        case CriterionId::A2nMember: return "A2N_MEMBER";
        case CriterionId::BMember: return "B_MEMBER";
        case CriterionId::NotA4: return "NOT_A4";
        case CriterionId::DimBound: return "DIM_BOUND";
        case CriterionId::EulerRelation: return "EULER_RELATION";
        case CriterionId::Inequality26: return "INEQUALITY_26";
        case CriterionId::Rank4Criterion: return "RANK4_CRITERION";
        case CriterionId::NuBound: return "NU_BOUND";
        case CriterionId::ProductB3: return "PRODUCT_B3";
        case CriterionId::ProductB2B1: return "PRODUCT_B2B1";
        case CriterionId::ProductZ4: return "PRODUCT_Z4";
    }
    return "?";
}

const char* to_string(CriterionVerdict v) {
    switch (v) {
        case CriterionVerdict::Fired: return "FIRED";
        case CriterionVerdict::NotFired: return "NOT_FIRED";
        case CriterionVerdict::NotEvaluable: return "NOT_EVALUABLE";
    }
    return "?";
}

const char* to_string(CriterionTag t) {
    switch (t) {
        case CriterionTag::Necessary: return "NECESSARY";
        case CriterionTag::Sufficient: return "SUFFICIENT";
        case CriterionTag::Consistency: return "CONSISTENCY";
    }
    return "?";
}

const CriterionResult* ClassEvidence::find(CriterionId id) const {
    for (const auto& r : verdicts)
        if (r.id == id) return &r;
    return nullptr;
}

bool ClassEvidence::fired(CriterionId id) const {
    const auto* r = find(id);
    return r && r->verdict == CriterionVerdict::Fired;
}

namespace {

bool is_rank4_torus_betti(const std::vector<long>& b) {
    return b == std::vector<long>{1, 4, 6, 4, 1};
}

bool is_binomial_betti(const std::vector<long>& b) {
    if (b.empty()) return false;
    const int m = static_cast<int>(b.size()) - 1;
    for (int k = 0; k <= m; ++k)
        if (b[static_cast<std::size_t>(k)] != binomial(m, k)) return false;
    return true;
}

std::string num(long v) { return std::to_string(v); }

}  // namespace

ClassEvidence classify(const GroupProfile& p) {
    ClassEvidence ev;
    const bool has_b3 = p.betti.size() >= 4;
    const bool has_b2 = p.betti.size() >= 3;
    auto push = [&](CriterionId id, CriterionVerdict v, CriterionTag t, std::string j) {
        ev.verdicts.push_back({id, v, t, std::move(j)});
    };

    // membership via the sufficient lattice criterion: certified completely
    // solvable model of even dimension, asserted lattice, symplectic model
    if (p.dim_model && *p.dim_model % 2 == 0 && *p.dim_model > 0) {
        const bool cs = p.flags.completely_solvable &&
                        *p.flags.completely_solvable == CompletelySolvable::CertifiedYes;
        const bool fires = cs && p.flags.lattice_asserted && p.flags.symplectic_model;
        std::string j = "completely_solvable=" +
                        std::string(p.flags.completely_solvable
                                        ? to_string(*p.flags.completely_solvable)
                                        : "UNKNOWN") +
                        ", lattice_asserted=" + (p.flags.lattice_asserted ? "true" : "false") +
                        ", symplectic_model=" + (p.flags.symplectic_model ? "true" : "false") +
                        ", dim=" + num(*p.dim_model);
        if (fires)
            j += "; class-A membership at dimension " + num(*p.dim_model) +
                 " (aspherical model with trivial pi2)";
        push(CriterionId::A2nMember, fires ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
             CriterionTag::Sufficient, j);
    } else {
        push(CriterionId::A2nMember, CriterionVerdict::NotEvaluable, CriterionTag::Sufficient,
             "no even-dimensional model recorded");
    }

    // b1 < b3 forces class-B membership and excludes class A at dimension 4;
    // the two fire together by construction.
    if (has_b3) {
        const bool lt = p.b(1) < p.b(3);
        std::string cite = "b1=" + num(p.b(1)) + (lt ? " < " : " >= ") + "b3=" + num(p.b(3));
        push(CriterionId::BMember, lt ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
             CriterionTag::Sufficient,
             cite + (lt ? "; realizable only with nontrivial pi2" : ""));
        push(CriterionId::NotA4, lt ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
             CriterionTag::Necessary,
             cite + (lt ? "; class-A membership at dimension 4 is excluded" : ""));
    } else {
        push(CriterionId::BMember, CriterionVerdict::NotEvaluable, CriterionTag::Sufficient,
             "betti vector too short for b3");
        push(CriterionId::NotA4, CriterionVerdict::NotEvaluable, CriterionTag::Necessary,
             "betti vector too short for b3");
    }

    // vanishing even Betti numbers bound the dimension of any aspherical model
    {
        std::vector<int> zero_ks;
        for (int k = 1; 2 * k < static_cast<int>(p.betti.size()); ++k)
            if (p.b(2 * k) == 0) zero_ks.push_back(k);
        if (zero_ks.empty()) {
            push(CriterionId::DimBound, CriterionVerdict::NotFired, CriterionTag::Necessary,
                 "no vanishing even Betti number in range");
        } else {
            std::string j = "b_{2k}=0 for k in {";
            for (std::size_t i = 0; i < zero_ks.size(); ++i)
                j += (i ? "," : "") + num(zero_ks[static_cast<std::size_t>(i)]);
            j += "}; any aspherical model of dimension 2n needs n <= " + num(zero_ks.front());
            push(CriterionId::DimBound, CriterionVerdict::Fired, CriterionTag::Necessary, j);
        }
    }

    // Euler consistency for even-dimensional (solv/nil)manifold profiles
    if (p.dim_model && p.flags.nilpotent &&
        static_cast<int>(p.betti.size()) == *p.dim_model + 1) {
        long chi = 0;
        for (std::size_t k = 0; k < p.betti.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * p.betti[k];
        bool ok = chi == 0;
        std::string j = "alternating sum = " + num(chi);
        if (*p.dim_model == 6) {
            long id6 = 2 - 2 * p.b(1) + 2 * p.b(2) - p.b(3);
            ok = ok && id6 == 0;
            j += "; 2-2b1+2b2-b3 = " + num(id6);
        }
        push(CriterionId::EulerRelation, ok ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
             CriterionTag::Consistency, j);
        if (!ok) ev.notes.push_back("Euler relation violated: inconsistent input Betti data");
    } else {
        push(CriterionId::EulerRelation, CriterionVerdict::NotEvaluable, CriterionTag::Consistency,
             "not a nilmanifold-model profile with a complete Betti vector");
    }

    if (has_b2) {
        const long lhs = 2 + 2 * p.b(2);
        const long rhs = 3 * p.b(1);
        push(CriterionId::Inequality26,
             lhs > rhs ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
             CriterionTag::Consistency,
             "2+2b2=" + num(lhs) + (lhs > rhs ? " > " : " <= ") + "3b1=" + num(rhs));
    } else {
        push(CriterionId::Inequality26, CriterionVerdict::NotEvaluable, CriterionTag::Consistency,
             "betti vector too short for b2");
    }

    // rank-4 realization: finitely generated torsion-free nilpotent of rank 4
    // with an orientable model is realizable with trivial pi2 in dimension 4
    if (p.flags.nilpotent && p.dim_model) {
        const bool fires = p.flags.torsion_free && *p.dim_model == 4 && p.flags.orientable_model &&
                           (p.betti.size() < 5 || p.b(4) == 1);
        std::string j = "nilpotent, torsion_free=" + std::string(p.flags.torsion_free ? "true" : "false") +
                        ", rank=" + num(*p.dim_model) +
                        ", orientable_model=" + (p.flags.orientable_model ? "true" : "false");
        if (fires) j += "; class-A membership at dimension 4";
        push(CriterionId::Rank4Criterion,
             fires ? CriterionVerdict::Fired : CriterionVerdict::NotFired, CriterionTag::Sufficient,
             j);
    } else {
        push(CriterionId::Rank4Criterion, CriterionVerdict::NotEvaluable, CriterionTag::Sufficient,
             "not a nilpotent profile with a recorded rank");
    }

    // upper bound for the largest realizable model dimension (assumes the
    // Betti vector is complete)
    if (!p.betti.empty()) {
        int bound = 0;
        for (int k = 0; 2 * k < static_cast<int>(p.betti.size()); ++k)
            if (p.b(2 * k) != 0) bound = k;
        std::string j = "nu <= " + num(bound) +
                        " (largest k with b_{2k} != 0; invariant-model upper bound, assumes "
                        "complete Betti vector)";
        if (p.dim_model && p.flags.aspherical_asserted)
            j += "; realized model gives nu >= " + num(*p.dim_model / 2);
        push(CriterionId::NuBound, CriterionVerdict::Fired, CriterionTag::Necessary, j);
    } else {
        push(CriterionId::NuBound, CriterionVerdict::NotEvaluable, CriterionTag::Necessary,
             "empty betti vector");
    }

    // surfaced open questions; the tool takes no position
    if (is_rank4_torus_betti(p.betti))
        ev.notes.push_back(
            "open question: whether the free abelian group of rank 4 is realizable with "
            "nontrivial pi2 in dimension 4 is not decided by these criteria");
    if (is_binomial_betti(p.betti) && (p.betti.size() - 1) % 2 == 1 && p.betti.size() - 1 > 3)
        ev.notes.push_back(
            "open question: realizability of free abelian groups of odd rank > 3 as "
            "aspherical-model fundamental groups is not decided by these criteria");
    return ev;
}

GroupProfile kunneth(const GroupProfile& p, const GroupProfile& q) {
    GroupProfile out;
    if (!p.betti.empty() && !q.betti.empty()) {
        out.betti.assign(p.betti.size() + q.betti.size() - 1, 0);
        for (std::size_t i = 0; i < p.betti.size(); ++i)
            for (std::size_t j = 0; j < q.betti.size(); ++j) out.betti[i + j] += p.betti[i] * q.betti[j];
    }
    if (p.dim_model && q.dim_model) out.dim_model = *p.dim_model + *q.dim_model;
    out.flags.nilpotent = p.flags.nilpotent && q.flags.nilpotent;
    out.flags.torsion_free = p.flags.torsion_free && q.flags.torsion_free;
    out.flags.type_r_asserted = p.flags.type_r_asserted && q.flags.type_r_asserted;
    out.flags.lattice_asserted = p.flags.lattice_asserted && q.flags.lattice_asserted;
    out.flags.orientable_model = p.flags.orientable_model && q.flags.orientable_model;
    out.flags.symplectic_model = p.flags.symplectic_model && q.flags.symplectic_model;
    out.flags.aspherical_asserted = p.flags.aspherical_asserted && q.flags.aspherical_asserted;
    if (p.flags.completely_solvable && q.flags.completely_solvable) {
        // block-diagonal adjoint operators: eigenvalues are the union
        if (*p.flags.completely_solvable == CompletelySolvable::No ||
            *q.flags.completely_solvable == CompletelySolvable::No)
            out.flags.completely_solvable = CompletelySolvable::No;
        else if (*p.flags.completely_solvable == CompletelySolvable::CertifiedYes &&
                 *q.flags.completely_solvable == CompletelySolvable::CertifiedYes)
            out.flags.completely_solvable = CompletelySolvable::CertifiedYes;
        else
            out.flags.completely_solvable = CompletelySolvable::NecessaryConditionsPass;
    }
    out.source = p.source + " x " + q.source;
    return out;
}

ClassEvidence product_criteria(const GroupProfile& p, const GroupProfile& q) {
    ClassEvidence ev;
    auto push = [&](CriterionId id, CriterionVerdict v, CriterionTag t, std::string j) {
        ev.verdicts.push_back({id, v, t, std::move(j)});
    };

    if (!p.flags.aspherical_asserted || !q.flags.aspherical_asserted) {
        for (CriterionId id :
             {CriterionId::ProductB3, CriterionId::ProductB2B1, CriterionId::ProductZ4,
              CriterionId::BMember})
            push(id, CriterionVerdict::NotEvaluable, CriterionTag::Sufficient,
                 "both factors must be asserted symplectically aspherical");
        return ev;
    }

    const long b3max = std::max(p.b(3), q.b(3));
    const bool iv = p.betti.size() >= 4 || q.betti.size() >= 4 ? b3max >= 1 : false;
    push(CriterionId::ProductB3, iv ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
         CriterionTag::Sufficient, "max(b3) = " + std::to_string(b3max));

    const long b2max = std::max(p.b(2), q.b(2));
    const long b1max = std::max(p.b(1), q.b(1));
    const bool v = b2max >= 2 && b1max >= 1;
    push(CriterionId::ProductB2B1, v ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
         CriterionTag::Sufficient,
         "max(b2) = " + std::to_string(b2max) + ", max(b1) = " + std::to_string(b1max));

    const bool z4 = is_rank4_torus_betti(p.betti) || is_rank4_torus_betti(q.betti);
    push(CriterionId::ProductZ4, z4 ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
         CriterionTag::Sufficient,
         z4 ? "one factor carries the rank-4 torus Betti data (1,4,6,4,1)"
            : "no factor carries the rank-4 torus Betti data");

    const bool any = iv || v || z4;
    GroupProfile prod = kunneth(p, q);
    std::string j;
    if (any) {
        j = "product rule fired; product has b1=" + std::to_string(prod.b(1)) +
            ", b3=" + std::to_string(prod.b(3));
        if (prod.b(1) >= prod.b(3)) {
            j += "; INCONSISTENT with b1 < b3 on the product";
            ev.notes.push_back(
                "product criterion fired but the Kunneth profile does not satisfy b1 < b3; "
                "the input Betti data is inconsistent with the asserted asphericity");
        }
    } else {
        j = "no product rule fired";
    }
    push(CriterionId::BMember, any ? CriterionVerdict::Fired : CriterionVerdict::NotFired,
         CriterionTag::Sufficient, j);
    return ev;
}

ChainReport chain_report(const std::vector<DimensionEvidence>& evidence) {
    ChainReport rep;
    std::map<int, DimensionEvidence> by_dim;
    for (const auto& e : evidence) {
        if (e.dim < 2 || e.dim % 2 != 0) {
            rep.violations.push_back("dimension " + std::to_string(e.dim) +
                                     ": model dimensions must be even and at least 2");
            continue;
        }
        auto [it, inserted] = by_dim.emplace(e.dim, e);
        if (!inserted)
            rep.violations.push_back("duplicate evidence for dimension " + std::to_string(e.dim));
    }

    auto describe = [](int dim, bool cls_a) {
        return std::string(cls_a ? "A" : "B") + "_" + std::to_string(dim);
    };

    for (const auto& [dim, e] : by_dim) {
        if (e.in_a == Membership::Member) {
            for (int d = dim - 2; d >= 6; d -= 2) {
                rep.implied.push_back(describe(dim, true) + " implies " + describe(d, true));
                auto it = by_dim.find(d);
                if (it != by_dim.end() && it->second.in_a == Membership::NonMember)
                    rep.violations.push_back("recorded non-membership in " + describe(d, true) +
                                             " contradicts membership in " + describe(dim, true));
            }
            if (dim >= 6) {
                rep.implied.push_back(describe(dim, true) + " implies A_4 or B_4");
                auto it = by_dim.find(4);
                if (it != by_dim.end() && it->second.in_a == Membership::NonMember &&
                    it->second.in_b == Membership::NonMember)
                    rep.violations.push_back(
                        "recorded non-membership in both A_4 and B_4 contradicts membership in " +
                        describe(dim, true));
            }
        }
        if (e.in_b == Membership::Member) {
            for (int d = dim - 2; d >= 4; d -= 2) {
                rep.implied.push_back(describe(dim, false) + " implies " + describe(d, false));
                auto it = by_dim.find(d);
                if (it != by_dim.end() && it->second.in_b == Membership::NonMember)
                    rep.violations.push_back("recorded non-membership in " + describe(d, false) +
                                             " contradicts membership in " + describe(dim, false));
            }
        }
    }
    return rep;
}

}  // namespace liecoh
