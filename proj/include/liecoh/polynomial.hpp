#pragma once

#include <vector>

#include "liecoh/rat_matrix.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

/// Univariate polynomial over Q, coefficient of x^i at position i.
/// Canonical representation drops trailing zeros; the zero polynomial is empty.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
Rat poly_eval(const Poly& p, const Rat& x);
Poly poly_derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_remainder(Poly num, const Poly& den);
/// Exact quotient; throws std::logic_error if den does not divide num.
Poly poly_quotient_exact(Poly num, const Poly& den);
/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);

/// Number of distinct real roots, by Sturm sign variations at -inf/+inf.
int sturm_distinct_real_roots(const Poly& p);

/// Real roots counted with multiplicity.
int real_root_count(const Poly& p);

/// True iff every complex root of p is real (counting multiplicity).
/// Vacuously true in degree <= 0; p must be nonzero.
bool all_roots_real(const Poly& p);

/// Characteristic polynomial det(xI - M), computed by fraction-free
/// determinant evaluation at n+1 integer points and Lagrange interpolation.
Poly characteristic_polynomial(const RatMatrix& m);

}  // namespace liecoh
