#include "liecoh/generate.hpp"

#include <stdexcept>

#include "liecoh/symplectic.hpp"

namespace liecoh {

LieAlgebra random_filtered_algebra(std::mt19937_64& rng, int dim, int density_percent,
                                   int coeff_bound) {
    if (dim < 0) throw std::invalid_argument("random_filtered_algebra: negative dimension");
    std::uniform_int_distribution<int> percent(0, 99);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);

    std::vector<Form> dgen;
    for (int k = 1; k <= dim; ++k) {
        // cocycles of the algebra on generators 1..k-1, lifted to ambient dim
        std::vector<Form> lower(dgen.begin(), dgen.end());
        for (auto& f : lower) {
            Form lifted(k - 1, 2);
            for (const auto& [lab, c] : f.terms()) lifted.add_term(lab, c);
            f = lifted;
        }
        Form d_k(dim, 2);
        if (k >= 3) {
            LieAlgebra lower_alg = LieAlgebra::from_differentials(lower);
            for (const Form& sigma : closed_two_forms(lower_alg)) {
                if (percent(rng) >= density_percent) continue;
                long c = coeff(rng);
                if (c == 0) c = 1;
                for (const auto& [lab, v] : sigma.terms()) d_k.add_term(lab, v * Rat(c));
            }
        }
        dgen.push_back(std::move(d_k));
    }
    return LieAlgebra::from_differentials(std::move(dgen));
}

LieAlgebra inject_jacobi_violation(std::mt19937_64& rng, const LieAlgebra& L) {
    const int n = L.dim();
    if (n < 3) throw std::runtime_error("inject_jacobi_violation: need dimension >= 3");
    std::uniform_int_distribution<int> slot(1, n);
    std::uniform_int_distribution<int> index(1, n);
    std::uniform_int_distribution<long> coeff(1, 2);

    for (int attempt = 0; attempt < 256; ++attempt) {
        int k = slot(rng);
        int i = index(rng), j = index(rng);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        std::vector<Form> dgen;
        for (int s = 1; s <= n; ++s) dgen.push_back(L.generator_differential(s));
        dgen[static_cast<std::size_t>(k - 1)].add_term(IndexSet({i, j}), Rat(coeff(rng)));
        LieAlgebra mutated = LieAlgebra::from_differentials(std::move(dgen));
        if (!mutated.jacobi_ok()) return mutated;
    }
    throw std::runtime_error("inject_jacobi_violation: no violating mutation found");
}

}  // namespace liecoh
