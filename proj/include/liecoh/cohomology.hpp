#pragma once

#include <optional>
#include <vector>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Matrix of d: Lambda^k -> Lambda^{k+1} in lexicographic bases;
/// columns indexed by exterior_basis(n, k).
RatMatrix differential_matrix(const LieAlgebra& L, int k);

/// Betti numbers b_0..b_n of the Chevalley-Eilenberg complex,
/// b_k = dim ker(d_k) - rank(d_{k-1}).
std::vector<long> betti(const LieAlgebra& L);

struct CohomologyClass {
    int degree = 0;
    Form representative;         // a cocycle
    std::vector<Rat> coordinates;  // unique expansion in the chosen H^k basis

    bool is_zero() const;
};

struct ClassResult {
    enum class Kind { Class, IsExact, NotClosed };
    Kind kind = Kind::NotClosed;
    std::optional<CohomologyClass> cls;  // present when kind == Class
};

/// The cohomology ring data of one algebra: Betti numbers, canonical
/// representative cocycles per degree, and reduction machinery for cup
/// products. Representatives are the RREF completion of the image basis
/// inside the kernel, so everything here is reproducible.
class CohomologyRing {
public:
    explicit CohomologyRing(const LieAlgebra& L);

    const LieAlgebra& algebra() const { return L_; }
    const std::vector<long>& betti() const { return betti_; }
    const std::vector<std::vector<Form>>& bases() const { return reps_; }

    /// NOT_CLOSED when d a != 0, IS_EXACT for nonzero cocycles in the image
    /// of d, otherwise the class with its canonical coordinates (the zero
    /// form yields the zero class).
    ClassResult class_of(const Form& a) const;

    /// Class of the i-th basis representative of H^k.
    CohomologyClass basis_class(int k, int i) const;

    /// class_of(wedge of representatives); degree past n yields the zero class.
    CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y) const;

    /// Cup structure constants: table[i][j] = coordinates of
    /// [rep_i^(p)] u [rep_j^(q)] in the H^{p+q} basis.
    std::vector<std::vector<std::vector<Rat>>> cup_table(int p, int q) const;

    /// Residue of vec(a) against the image of d (nonzero iff [a] != 0);
    /// a must be a cocycle of degree k.
    bool is_exact(const Form& a) const;

private:
    LieAlgebra L_;
    std::vector<long> betti_;
    std::vector<std::vector<Form>> reps_;  // per degree
    // per degree: image RREF + pivots, and the solve matrix [image | reps]
    std::vector<RatMatrix> image_rref_;
    std::vector<std::vector<int>> image_pivots_;
    std::vector<RatMatrix> solve_matrix_;
};

enum class PoincareResult { True, False, NotApplicable };

/// Betti symmetry b_k = b_{n-k} plus nondegeneracy of the cup pairing
/// H^k x H^{n-k} -> H^n for every k. NotApplicable on non-unimodular input.
PoincareResult poincare_check(const LieAlgebra& L);

/// Convenience wrappers constructing the ring per call.
ClassResult class_of(const LieAlgebra& L, const Form& a);
CohomologyClass cup(const LieAlgebra& L, const CohomologyClass& x, const CohomologyClass& y);

}  // namespace liecoh
