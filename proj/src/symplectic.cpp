#include "liecoh/symplectic.hpp"

#include <random>
#include <stdexcept>

namespace liecoh {

const char* to_string(SymplecticVerdict v) {
    switch (v) {
        case SymplecticVerdict::Symplectic: return "SYMPLECTIC";
        case SymplecticVerdict::NotSymplectic: return "NOT_SYMPLECTIC";
        case SymplecticVerdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

const char* to_string(SearchMethod m) {
    switch (m) {
        case SearchMethod::SymbolicExpansion: return "SYMBOLIC_EXPANSION";
        case SearchMethod::PointSearch: return "POINT_SEARCH";
    }
    return "?";
}

std::vector<Form> closed_two_forms(const LieAlgebra& L) {
    L.require_jacobi();
    const int n = L.dim();
    auto labels = exterior_basis(n, 2);
    RatMatrix d2 = differential_matrix(L, 2);
    auto ker = kernel_basis(d2);
    if (ker.empty()) return {};
    RatMatrix canon = rref(RatMatrix::from_rows(ker));
    std::vector<Form> out;
    for (int i = 0; i < canon.rows(); ++i) {
        Form f(n, 2);
        for (int j = 0; j < canon.cols(); ++j)
            if (canon.at(i, j) != 0) f.add_term(labels[static_cast<std::size_t>(j)], canon.at(i, j));
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

IndexSet top_label(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return IndexSet(v);
}

Rat multinomial(int q, const std::vector<int>& exps) {
    Int num = 1;
    for (int i = 2; i <= q; ++i) num *= i;
    Int den = 1;
    for (int e : exps)
        for (int i = 2; i <= e; ++i) den *= i;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Enumerates exponent vectors k with |k| = q over the sigmas, carrying the
// partial wedge product and pruning dead branches. visit(exps, product) is
// called at every leaf with a nonzero product.
template <typename Visit>
void for_each_power_product(const std::vector<Form>& sigmas, int q, int n, const Visit& visit) {
    std::vector<int> exps(sigmas.size(), 0);
    Form unit = Form::scalar_one(n);

    auto rec = [&](auto&& self, std::size_t i, int remaining, const Form& partial) -> void {
        if (partial.is_zero()) return;
        if (remaining == 0) {
            visit(exps, partial);
            return;
        }
        if (i == sigmas.size()) return;
        // exponent 0 first, then increasing powers of sigma_i
        Form acc = partial;
        for (int e = 0; e <= remaining; ++e) {
            if (e > 0) {
                acc = wedge(acc, sigmas[i]);
                if (acc.is_zero()) break;
            }
            exps[i] = e;
            self(self, i + 1, remaining - e, acc);
        }
        exps[i] = 0;
    };
    rec(rec, 0, q, unit);
}

}  // namespace

PfaffianPolynomial pfaffian_polynomial(const LieAlgebra& L, const std::vector<Form>& sigmas) {
    const int n = L.dim();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian_polynomial: odd ambient dimension");
    PfaffianPolynomial p;
    p.variables = static_cast<int>(sigmas.size());
    p.degree = n / 2;
    const IndexSet top = top_label(n);

    for_each_power_product(sigmas, p.degree, n, [&](const std::vector<int>& exps, const Form& prod) {
        Rat c = prod.coefficient(top);
        if (c == 0) return;
        p.expansion.emplace(exps, multinomial(p.degree, exps) * c);
    });
    return p;
}

namespace {

// One variable at a time: substitute integer values 0, 1, -1, 2, -2, 4, -4,...
// keeping the remaining polynomial nonzero. Terminates because a nonzero
// polynomial of degree q in one variable vanishes at no more than q points.
std::vector<Int> desingularize(const PfaffianPolynomial& p) {
    std::map<std::vector<int>, Rat> cur = p.expansion;
    const int m = p.variables;
    std::vector<Int> values(static_cast<std::size_t>(m), Int(0));

    for (int var = 0; var < m; ++var) {
        std::vector<Int> candidates{0};
        for (int r = 1; r <= (1 << (p.degree + 1)); r *= 2) {
            candidates.push_back(Int(r));
            candidates.push_back(Int(-r));
        }
        bool fixed = false;
        for (const Int& v : candidates) {
            std::map<std::vector<int>, Rat> next;
            for (const auto& [exps, c] : cur) {
                int e = exps[static_cast<std::size_t>(var)];
                Rat scale(1);
                for (int t = 0; t < e; ++t) scale *= Rat(v);
                if (scale == 0) continue;
                std::vector<int> rest = exps;
                rest[static_cast<std::size_t>(var)] = 0;
                auto [it, inserted] = next.emplace(std::move(rest), c * scale);
                if (!inserted) {
                    it->second += c * scale;
                    if (it->second == 0) next.erase(it);
                }
            }
            if (!next.empty()) {
                values[static_cast<std::size_t>(var)] = v;
                cur = std::move(next);
                fixed = true;
                break;
            }
        }
        if (!fixed) throw std::logic_error("desingularize: no substitution kept the polynomial nonzero");
    }
    return values;
}

Form combine(const std::vector<Form>& sigmas, const std::vector<Int>& values, int n) {
    Form w(n, 2);
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        if (values[i] == 0) continue;
        Form s = sigmas[i].scaled(Rat(values[i]));
        w = w + s;
    }
    return w;
}

}  // namespace

SymplecticReport find_symplectic(const LieAlgebra& L, const SymplecticOptions& opts) {
    L.require_jacobi();
    SymplecticReport rep;
    rep.aspherical_note =
        L.structure_report().completely_solvable == CompletelySolvable::CertifiedYes;

    const int n = L.dim();
    if (n % 2 != 0) {
        rep.verdict = SymplecticVerdict::NotSymplectic;
        rep.method = SearchMethod::SymbolicExpansion;
        rep.reason = "ODD_DIMENSION";
        return rep;
    }
    const int q = n / 2;
    if (n == 0) {
        rep.verdict = SymplecticVerdict::Symplectic;
        rep.method = SearchMethod::SymbolicExpansion;
        rep.witness = Form(0, 2);
        rep.top_power = Form::scalar_one(0);
        return rep;
    }

    std::vector<Form> sigmas = closed_two_forms(L);
    const int m = static_cast<int>(sigmas.size());
    const IndexSet top = top_label(n);

    if (m <= opts.expansion_threshold) {
        rep.method = SearchMethod::SymbolicExpansion;
        PfaffianPolynomial p = pfaffian_polynomial(L, sigmas);
        if (p.identically_zero()) {
            rep.verdict = SymplecticVerdict::NotSymplectic;
            rep.reason = "PFAFFIAN_IDENTICALLY_ZERO";
            return rep;
        }
        std::vector<Int> values = desingularize(p);
        Form w = combine(sigmas, values, n);
        Form wq = power(w, q);
        if (!L.ce_differential(w).is_zero() || wq.coefficient(top) == 0)
            throw std::logic_error("find_symplectic: witness failed verification");
        rep.verdict = SymplecticVerdict::Symplectic;
        rep.witness = std::move(w);
        rep.top_power = std::move(wq);
        return rep;
    }

    // Too many variables for full expansion: deterministic seeded point
    // search over integer grids of increasing radius (Schwartz-Zippel: the
    // zero set of a nonzero degree-q polynomial is thin on such grids).
    rep.method = SearchMethod::PointSearch;
    std::mt19937_64 rng(0x6c6965636f68ULL);
    for (int radius = 1; radius <= opts.max_radius; radius *= 2) {
        std::uniform_int_distribution<long> dist(-radius, radius);
        for (int trial = 0; trial < opts.trials_per_radius; ++trial) {
            std::vector<Int> values(static_cast<std::size_t>(m));
            if (radius == 1 && trial == 0) {
                // canonical first candidate: the all-ones combination
                for (auto& v : values) v = 1;
            } else {
                for (auto& v : values) v = Int(dist(rng));
            }
            Form w = combine(sigmas, values, n);
            if (w.is_zero()) continue;
            Form wq = power(w, q);
            if (wq.coefficient(top) != 0) {
                if (!L.ce_differential(w).is_zero())
                    throw std::logic_error("find_symplectic: point-search witness is not closed");
                rep.verdict = SymplecticVerdict::Symplectic;
                rep.witness = std::move(w);
                rep.top_power = std::move(wq);
                return rep;
            }
        }
    }
    rep.verdict = SymplecticVerdict::Unknown;
    rep.reason = "POINT_SEARCH_EXHAUSTED";
    return rep;
}

int cup_length_two(const LieAlgebra& L) {
    L.require_jacobi();
    const int n = L.dim();
    if (n < 2) return 0;
    std::vector<Form> sigmas = closed_two_forms(L);
    if (sigmas.empty()) return 0;
    CohomologyRing ring(L);

    // [a]^q != 0 for some closed 2-form a iff some monomial product of the
    // kernel basis is non-exact: the class of (sum lambda sigma)^q is a
    // polynomial in lambda whose monomial coefficients are the classes of
    // the products sigma^k.
    int best = 0;
    for (int q = 1; 2 * q <= n; ++q) {
        bool found = false;
        for_each_power_product(sigmas, q, n, [&](const std::vector<int>&, const Form& prod) {
            if (found) return;
            if (!ring.is_exact(prod)) found = true;
        });
        if (!found) break;
        best = q;
    }
    return best;
}

bool is_h2_decomposable(const LieAlgebra& L) {
    L.require_jacobi();
    CohomologyRing ring(L);
    const long b1 = ring.betti().size() > 1 ? ring.betti()[1] : 0;
    const long b2 = ring.betti().size() > 2 ? ring.betti()[2] : 0;
    if (b2 == 0) return true;
    if (b1 == 0) return false;

    std::vector<std::vector<Rat>> rows;
    for (long i = 0; i < b1; ++i)
        for (long j = i + 1; j < b1; ++j) {
            auto c = ring.cup(ring.basis_class(1, static_cast<int>(i)),
                              ring.basis_class(1, static_cast<int>(j)))
                         .coordinates;
            rows.push_back(std::move(c));
        }
    if (rows.empty()) return false;
    return rank(RatMatrix::from_rows(rows)) == static_cast<int>(b2);
}

std::pair<Form, Int> integralize(const Form& a) {
    std::vector<Rat> coeffs;
    for (const auto& [lab, c] : a.terms()) coeffs.push_back(c);
    Int N = denominator_lcm(coeffs);
    return {a.scaled(Rat(N)), N};
}

}  // namespace liecoh
