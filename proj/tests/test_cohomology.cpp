#include <doctest.h>

#include <random>

#include "liecoh/cohomology.hpp"
#include "liecoh/generate.hpp"
#include "oracle.hpp"

using namespace liecoh;

namespace {

Form random_form(std::mt19937_64& rng, int n, int k, int terms = 3) {
    auto labels = exterior_basis(n, k);
    Form f(n, k);
    if (labels.empty()) return f;
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int t = 0; t < terms; ++t) f.add_term(labels[pick(rng)], Rat(coeff(rng)));
    return f;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("differential matrices of reference algebras") {
    auto abelian = LieAlgebra::parse("(0,0,0,0,0)");
    for (int k = 0; k <= 5; ++k) CHECK(rank(differential_matrix(abelian, k)) == 0);

    auto kt = LieAlgebra::parse("(0,0,0,12)");
    CHECK(rank(differential_matrix(kt, 1)) == 1);

    auto h3 = LieAlgebra::parse("(0,0,12)");
    CHECK(rank(differential_matrix(h3, 1)) == 1);
    CHECK(rank(differential_matrix(h3, 2)) == 1);
}

TEST_CASE("Betti numbers of reference algebras") {
    for (int n : {2, 4, 6, 8}) {
        std::string tuple = "(0";
        for (int i = 1; i < n; ++i) tuple += ",0";
        tuple += ")";
        auto b = betti(LieAlgebra::parse(tuple));
        for (int k = 0; k <= n; ++k) CHECK(b[static_cast<std::size_t>(k)] == binomial(n, k));
    }
    CHECK(betti(LieAlgebra::parse("(0,0,12)")) == std::vector<long>{1, 2, 2, 1});
    CHECK(betti(LieAlgebra::parse("(0,0,0,12)")) == std::vector<long>{1, 3, 4, 3, 1});
    CHECK(betti(LieAlgebra::parse("()")) == std::vector<long>{1});
}

TEST_CASE("Betti numbers match the oracle and its bookkeeping") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        LieAlgebra L = random_filtered_algebra(rng, 3 + static_cast<int>(rng() % 4));
        auto b = betti(L);
        CHECK(b == oracle::betti(L));
        // rank-nullity bookkeeping and zero Euler characteristic
        long chi = 0;
        for (int k = 0; k <= L.dim(); ++k) {
            int rk = rank(differential_matrix(L, k));
            int rk1 = k > 0 ? rank(differential_matrix(L, k - 1)) : 0;
            CHECK(rk + rk1 + b[static_cast<std::size_t>(k)] == binomial(L.dim(), k));
            chi += (k % 2 == 0 ? 1 : -1) * b[static_cast<std::size_t>(k)];
        }
        if (L.dim() >= 1) CHECK(chi == 0);
    }
}

TEST_CASE("class_of distinguishes exact, nonzero, and non-closed forms") {
    auto kt = LieAlgebra::parse("(0,0,0,12)");
    CohomologyRing ring(kt);

    auto exact = ring.class_of(Form::monomial(4, IndexSet({1, 2}), Rat(1)));
    CHECK(exact.kind == ClassResult::Kind::IsExact);

    auto cls = ring.class_of(Form::monomial(4, IndexSet({1, 3}), Rat(1)));
    REQUIRE(cls.kind == ClassResult::Kind::Class);
    CHECK_FALSE(cls.cls->is_zero());

    auto zero = ring.class_of(Form(4, 2));
    REQUIRE(zero.kind == ClassResult::Kind::Class);
    CHECK(zero.cls->is_zero());

    // e^4 is not closed
    auto open = ring.class_of(Form::generator(4, 4));
    CHECK(open.kind == ClassResult::Kind::NotClosed);
}

TEST_CASE("coordinates expand uniquely over the chosen basis") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        LieAlgebra L = random_filtered_algebra(rng, 3 + static_cast<int>(rng() % 3));
        CohomologyRing ring(L);
        for (int k = 0; k <= L.dim(); ++k) {
            const auto& reps = ring.bases()[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < reps.size(); ++i) {
                CHECK(L.ce_differential(reps[i]).is_zero());
                auto r = ring.class_of(reps[i]);
                REQUIRE(r.kind == ClassResult::Kind::Class);
                for (std::size_t j = 0; j < r.cls->coordinates.size(); ++j)
                    CHECK(r.cls->coordinates[j] == (i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("cup products on the free exterior ring and the nilpotent quotient") {
    auto abelian = LieAlgebra::parse("(0,0,0,0)");
    CohomologyRing ring(abelian);
    auto e1 = ring.class_of(Form::generator(4, 1));
    auto e2 = ring.class_of(Form::generator(4, 2));
    auto e3 = ring.class_of(Form::generator(4, 3));
    REQUIRE(e1.kind == ClassResult::Kind::Class);
    auto prod = ring.cup(*e1.cls, *e2.cls);
    CHECK_FALSE(prod.is_zero());
    CHECK(prod.degree == 2);

    // degree-1 classes anticommute
    auto xy = ring.cup(*e1.cls, *e3.cls);
    auto yx = ring.cup(*e3.cls, *e1.cls);
    REQUIRE(xy.coordinates.size() == yx.coordinates.size());
    for (std::size_t i = 0; i < xy.coordinates.size(); ++i)
        CHECK(xy.coordinates[i] == -yx.coordinates[i]);

    auto kt = LieAlgebra::parse("(0,0,0,12)");
    CohomologyRing ring_kt(kt);
    auto a = ring_kt.class_of(Form::generator(4, 1));
    auto b = ring_kt.class_of(Form::generator(4, 2));
    CHECK(ring_kt.cup(*a.cls, *b.cls).is_zero());  // e1 ^ e2 = d e4
}

TEST_CASE("cup is graded-commutative and representative-independent") {
    std::mt19937_64 rng(59);
    std::vector<LieAlgebra> algebras;
    algebras.push_back(LieAlgebra::parse("(0,0,0,12)"));
    algebras.push_back(LieAlgebra::parse("(0,0,12,13)"));
    algebras.push_back(LieAlgebra::parse("(0,0,0,0,12,34)"));
    for (const auto& L : algebras) {
        CohomologyRing ring(L);
        const auto& b = ring.betti();
        for (int trial = 0; trial < 40; ++trial) {
            int p = 1 + static_cast<int>(rng() % (L.dim() - 1));
            int q = 1 + static_cast<int>(rng() % (L.dim() - 1));
            if (b[static_cast<std::size_t>(p)] == 0 || b[static_cast<std::size_t>(q)] == 0) continue;
            auto x = ring.basis_class(p, static_cast<int>(rng() % b[static_cast<std::size_t>(p)]));
            auto y = ring.basis_class(q, static_cast<int>(rng() % b[static_cast<std::size_t>(q)]));

            auto xy = ring.cup(x, y);
            auto yx = ring.cup(y, x);
            REQUIRE(xy.coordinates.size() == yx.coordinates.size());
            const int sign = (p * q % 2 == 0) ? 1 : -1;
            for (std::size_t i = 0; i < xy.coordinates.size(); ++i)
                CHECK(xy.coordinates[i] == Rat(sign) * yx.coordinates[i]);

            // perturb a representative by an exact form: coordinates unchanged
            Form noise = L.ce_differential(random_form(rng, L.dim(), p - 1));
            CohomologyClass x2 = x;
            x2.representative = x.representative + noise;
            auto xy2 = ring.cup(x2, y);
            CHECK(xy2.coordinates == xy.coordinates);
        }
    }
}

TEST_CASE("poincare_check on reference algebras") {
    CHECK(poincare_check(LieAlgebra::parse("(0,0,0,0)")) == PoincareResult::True);
    CHECK(poincare_check(LieAlgebra::parse("(0,0,12)")) == PoincareResult::True);
    CHECK(poincare_check(LieAlgebra::parse("(0,0,0,12)")) == PoincareResult::True);
    CHECK(poincare_check(LieAlgebra::parse("(16+35,-26+45,36,-46,0,0)")) == PoincareResult::True);
    // non-unimodular input
    CHECK(poincare_check(LieAlgebra::parse("(0,-12)")) == PoincareResult::NotApplicable);
}

TEST_CASE("direct sums convolve Betti vectors") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        LieAlgebra a = random_filtered_algebra(rng, 2 + static_cast<int>(rng() % 3));
        LieAlgebra b = random_filtered_algebra(rng, 2 + static_cast<int>(rng() % 3));
        auto ba = betti(a);
        auto bb = betti(b);
        auto bs = betti(direct_sum(a, b));
        std::vector<long> conv(ba.size() + bb.size() - 1, 0);
        for (std::size_t i = 0; i < ba.size(); ++i)
            for (std::size_t j = 0; j < bb.size(); ++j) conv[i + j] += ba[i] * bb[j];
        CHECK(bs == conv);
    }
    // block structure: the two Heisenberg entries of the six-dimensional sum
    auto sum = direct_sum(LieAlgebra::parse("(0,0,12)"), LieAlgebra::parse("(0,0,12)"));
    CHECK(sum.to_tuple_string() == "(0,0,12,0,0,45)");
}

}  // TEST_SUITE
