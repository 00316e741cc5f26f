#include <doctest.h>

#include <random>

#include "liecoh/polynomial.hpp"

using namespace liecoh;

TEST_SUITE("polynomial") {

TEST_CASE("remainder, gcd and squarefree part") {
    // (x-1)^2 (x+2)
    Poly p = poly_mul(poly_mul({Rat(-1), Rat(1)}, {Rat(-1), Rat(1)}), {Rat(2), Rat(1)});
    Poly g = poly_gcd(p, poly_derivative(p));
    CHECK(poly_degree(g) == 1);  // x - 1
    Poly sf = squarefree_part(p);
    CHECK(poly_degree(sf) == 2);
    CHECK(poly_eval(sf, Rat(1)) == 0);
    CHECK(poly_eval(sf, Rat(-2)) == 0);

    CHECK(poly_remainder(p, {Rat(-1), Rat(1)}).empty());
    CHECK_THROWS_AS(poly_quotient_exact({Rat(1), Rat(1)}, {Rat(0), Rat(0), Rat(1)}),
                    std::logic_error);
}

TEST_CASE("sturm counts distinct real roots") {
    CHECK(sturm_distinct_real_roots({Rat(1), Rat(0), Rat(1)}) == 0);   // x^2 + 1
    CHECK(sturm_distinct_real_roots({Rat(-2), Rat(0), Rat(1)}) == 2);  // x^2 - 2
    CHECK(sturm_distinct_real_roots({Rat(0), Rat(1)}) == 1);           // x
    // x(x^2+1)
    CHECK(sturm_distinct_real_roots({Rat(0), Rat(1), Rat(0), Rat(1)}) == 1);
    // (x-1)(x-2)(x-3)
    Poly p = poly_mul(poly_mul({Rat(-1), Rat(1)}, {Rat(-2), Rat(1)}), {Rat(-3), Rat(1)});
    CHECK(sturm_distinct_real_roots(p) == 3);
}

TEST_CASE("real root count respects multiplicity") {
    // x^n has n real roots with multiplicity
    for (int n = 1; n <= 6; ++n) {
        Poly p(static_cast<std::size_t>(n) + 1, Rat(0));
        p.back() = 1;
        CHECK(real_root_count(p) == n);
        CHECK(all_roots_real(p));
    }
    // (x^2+1)^2 (x-5)
    Poly p = poly_mul(poly_mul({Rat(1), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(1)}),
                      {Rat(-5), Rat(1)});
    CHECK(real_root_count(p) == 1);
    CHECK_FALSE(all_roots_real(p));
}

TEST_CASE("all_roots_real on random split polynomials") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> root(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p{Rat(1)};
        int deg = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < deg; ++i) p = poly_mul(p, {Rat(-root(rng)), Rat(1)});
        CHECK(all_roots_real(p));
        CHECK(real_root_count(p) == deg);
        // multiplying in an irreducible quadratic breaks it
        CHECK_FALSE(all_roots_real(poly_mul(p, {Rat(1), Rat(1), Rat(1)})));
    }
}

TEST_CASE("characteristic polynomial of small matrices") {
    // diag(2, -3): (x-2)(x+3) = x^2 + x - 6
    RatMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = -3;
    CHECK(characteristic_polynomial(d) == Poly{Rat(-6), Rat(1), Rat(1)});

    // companion matrix of x^3 - 2x + 5
    RatMatrix c(3, 3);
    c.at(0, 2) = -5;
    c.at(1, 0) = 1;
    c.at(1, 2) = 2;
    c.at(2, 1) = 1;
    CHECK(characteristic_polynomial(c) == Poly{Rat(5), Rat(-2), Rat(0), Rat(1)});

    // rotation generator has no real eigenvalues beyond the zero block
    RatMatrix r(2, 2);
    r.at(0, 1) = -1;
    r.at(1, 0) = 1;
    CHECK(characteristic_polynomial(r) == Poly{Rat(1), Rat(0), Rat(1)});
    CHECK_FALSE(all_roots_real(characteristic_polynomial(r)));

    CHECK(characteristic_polynomial(RatMatrix(0, 0)) == Poly{Rat(1)});
}

TEST_CASE("characteristic polynomial is monic of degree n on random matrices") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rat(num(rng));
        Poly chi = characteristic_polynomial(m);
        REQUIRE(poly_degree(chi) == n);
        CHECK(chi.back() == 1);
        // Cayley-Hamilton style spot check: trace is -coefficient of x^{n-1}
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        CHECK(chi[static_cast<std::size_t>(n - 1)] == -tr);
        // determinant is (-1)^n chi(0)
        CHECK(determinant(m) == (n % 2 == 0 ? chi[0] : -chi[0]));
    }
}

}  // TEST_SUITE
