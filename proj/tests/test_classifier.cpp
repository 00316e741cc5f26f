#include <doctest.h>

#include <random>

#include "liecoh/classifier.hpp"

using namespace liecoh;

namespace {

GroupProfile torus_profile(int m) {
    GroupProfile p;
    for (int k = 0; k <= m; ++k) p.betti.push_back(binomial(m, k));
    p.dim_model = m;
    p.flags.nilpotent = true;
    p.flags.torsion_free = true;
    p.flags.lattice_asserted = true;
    p.flags.orientable_model = true;
    p.flags.symplectic_model = m % 2 == 0;
    p.flags.completely_solvable = CompletelySolvable::CertifiedYes;
    p.flags.aspherical_asserted = m % 2 == 0;
    p.source = "Z^" + std::to_string(m);
    return p;
}

GroupProfile raw_profile(std::vector<long> betti) {
    GroupProfile p;
    p.betti = std::move(betti);
    p.flags.aspherical_asserted = true;
    p.source = "raw";
    return p;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("profile with b1 < b3 fires the class-B and not-A4 criteria together") {
    // Betti data of the solvable catalog model
    auto ev = classify(raw_profile({1, 2, 3, 4, 3, 2, 1}));
    CHECK(ev.fired(CriterionId::BMember));
    CHECK(ev.fired(CriterionId::NotA4));
    CHECK(ev.find(CriterionId::BMember)->justification.find("b1=2") != std::string::npos);
    CHECK(ev.find(CriterionId::BMember)->justification.find("b3=4") != std::string::npos);
}

TEST_CASE("torus profile: A-membership fires, B does not") {
    auto ev = classify(torus_profile(4));
    CHECK(ev.fired(CriterionId::A2nMember));
    CHECK_FALSE(ev.fired(CriterionId::BMember));  // b1 = b3 = 4
    CHECK_FALSE(ev.fired(CriterionId::NotA4));
    CHECK(ev.fired(CriterionId::Rank4Criterion));
    // the rank-4 torus open question is surfaced
    bool surfaced = false;
    for (const auto& n : ev.notes)
        if (n.find("rank 4") != std::string::npos) surfaced = true;
    CHECK(surfaced);
}

TEST_CASE("B_MEMBER and NOT_A4 always fire together") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<long> b(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        auto ev = classify(raw_profile({1, b(rng), b(rng), b(rng), b(rng)}));
        CHECK(ev.fired(CriterionId::BMember) == ev.fired(CriterionId::NotA4));
    }
}

TEST_CASE("criteria depend only on Betti data except the flag-gated ones") {
    GroupProfile p = raw_profile({1, 2, 3, 4});
    auto before = classify(p);
    p.flags.nilpotent = true;
    p.flags.lattice_asserted = true;
    p.flags.torsion_free = true;
    auto after = classify(p);
    for (CriterionId id : {CriterionId::BMember, CriterionId::NotA4, CriterionId::DimBound,
                           CriterionId::Inequality26, CriterionId::NuBound})
        CHECK(before.fired(id) == after.fired(id));
}

TEST_CASE("dimension bound records vanishing even Betti numbers") {
    auto ev = classify(raw_profile({1, 1, 0, 0, 0}));
    REQUIRE(ev.fired(CriterionId::DimBound));
    CHECK(ev.find(CriterionId::DimBound)->justification.find("n <= 1") != std::string::npos);

    auto none = classify(torus_profile(4));
    CHECK_FALSE(none.fired(CriterionId::DimBound));
}

TEST_CASE("euler relation and the six-dimensional identity") {
    auto t6 = classify(torus_profile(6));
    CHECK(t6.fired(CriterionId::EulerRelation));
    CHECK(t6.fired(CriterionId::Inequality26));  // 2+30 > 18

    // corrupted nilmanifold profile: relation must be flagged
    GroupProfile bad = torus_profile(6);
    bad.betti[3] = 19;
    auto ev = classify(bad);
    CHECK(ev.find(CriterionId::EulerRelation)->verdict == CriterionVerdict::NotFired);
    CHECK_FALSE(ev.notes.empty());
}

TEST_CASE("nu bound reads the largest nonzero even Betti slot") {
    auto t8 = classify(torus_profile(8));
    REQUIRE(t8.fired(CriterionId::NuBound));
    CHECK(t8.find(CriterionId::NuBound)->justification.find("nu <= 4") != std::string::npos);

    auto ev = classify(raw_profile({1, 2, 1, 2, 0, 0, 0}));
    CHECK(ev.find(CriterionId::NuBound)->justification.find("nu <= 1") != std::string::npos);
}

TEST_CASE("criteria needing missing Betti entries are NOT_EVALUABLE") {
    auto ev = classify(raw_profile({1, 2}));
    CHECK(ev.find(CriterionId::BMember)->verdict == CriterionVerdict::NotEvaluable);
    CHECK(ev.find(CriterionId::NotA4)->verdict == CriterionVerdict::NotEvaluable);
    CHECK(ev.find(CriterionId::Inequality26)->verdict == CriterionVerdict::NotEvaluable);
}

TEST_CASE("kunneth convolves Betti vectors and conjoins flags") {
    auto z2 = torus_profile(2);
    auto t4 = kunneth(z2, z2);
    CHECK(t4.betti == std::vector<long>{1, 4, 6, 4, 1});
    CHECK(t4.dim_model == 4);
    CHECK(t4.flags.nilpotent);
    CHECK(t4.flags.lattice_asserted);
    CHECK(*t4.flags.completely_solvable == CompletelySolvable::CertifiedYes);

    // mixed solvability degrades to the necessary-conditions level
    GroupProfile s = z2;
    s.flags.completely_solvable = CompletelySolvable::NecessaryConditionsPass;
    CHECK(*kunneth(z2, s).flags.completely_solvable ==
          CompletelySolvable::NecessaryConditionsPass);
    s.flags.completely_solvable = CompletelySolvable::No;
    CHECK(*kunneth(z2, s).flags.completely_solvable == CompletelySolvable::No);
}

TEST_CASE("the third Betti number of a product expands term for term") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<long> b(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        GroupProfile p = raw_profile({1, b(rng), b(rng), b(rng)});
        GroupProfile q = raw_profile({1, b(rng), b(rng), b(rng)});
        GroupProfile prod = kunneth(p, q);
        CHECK(prod.b(3) ==
              q.b(3) + p.b(1) * q.b(2) + p.b(2) * q.b(1) + p.b(3));
        CHECK(prod.b(1) == p.b(1) + q.b(1));
        // commutative and associative on Betti vectors
        CHECK(kunneth(q, p).betti == prod.betti);
        GroupProfile r = raw_profile({1, b(rng), b(rng)});
        CHECK(kunneth(kunneth(p, q), r).betti == kunneth(p, kunneth(q, r)).betti);
    }
}

TEST_CASE("product criteria fire on their stated hypotheses") {
    // (iv): one factor with b3 >= 1
    GroupProfile a = raw_profile({1, 1, 1, 1});
    GroupProfile b = raw_profile({1, 0, 1, 0});
    auto ev = product_criteria(a, b);
    CHECK(ev.fired(CriterionId::ProductB3));
    CHECK(ev.fired(CriterionId::BMember));

    // (v): max b2 >= 2 and max b1 >= 1, with both b3 = 0
    GroupProfile c = raw_profile({1, 1, 2, 0});
    GroupProfile d = raw_profile({1, 1, 1, 0});
    auto ev5 = product_criteria(c, d);
    CHECK_FALSE(ev5.fired(CriterionId::ProductB3));
    CHECK(ev5.fired(CriterionId::ProductB2B1));
    CHECK(ev5.fired(CriterionId::BMember));

    // (vi): a rank-4 torus factor
    auto z4 = torus_profile(4);
    GroupProfile surface = raw_profile({1, 4, 1});  // genus-2 surface group data
    auto ev6 = product_criteria(surface, z4);
    CHECK(ev6.fired(CriterionId::ProductZ4));
    CHECK(ev6.fired(CriterionId::BMember));
    // (vi) is an instance of (v)
    CHECK(ev6.fired(CriterionId::ProductB2B1));

    // missing asphericity assertion: nothing is evaluable
    GroupProfile raw = raw_profile({1, 1, 1, 1});
    raw.flags.aspherical_asserted = false;
    auto none = product_criteria(raw, z4);
    CHECK(none.find(CriterionId::ProductB3)->verdict == CriterionVerdict::NotEvaluable);
    CHECK(none.find(CriterionId::BMember)->verdict == CriterionVerdict::NotEvaluable);
}

TEST_CASE("fired product criteria are consistent with b1 < b3 on the product") {
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<long> bval(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        GroupProfile p = raw_profile({1, bval(rng), 1 + bval(rng), bval(rng)});
        GroupProfile q = raw_profile({1, bval(rng), 1 + bval(rng), bval(rng)});
        auto ev = product_criteria(p, q);
        if (ev.fired(CriterionId::BMember) && ev.notes.empty()) {
            GroupProfile prod = kunneth(p, q);
            CHECK(prod.b(1) < prod.b(3));
        }
    }
}

TEST_CASE("chain report lists implied memberships and flags contradictions") {
    // membership at dimension 8 walks down the chain
    ChainReport r = chain_report({{8, Membership::Member, Membership::Unknown, ""}});
    REQUIRE_FALSE(r.implied.empty());
    bool has6 = false, has4 = false;
    for (const auto& s : r.implied) {
        if (s.find("A_6") != std::string::npos) has6 = true;
        if (s.find("A_4 or B_4") != std::string::npos) has4 = true;
    }
    CHECK(has6);
    CHECK(has4);
    CHECK(r.violations.empty());

    // recorded non-membership below a membership is an input inconsistency
    ChainReport bad = chain_report({{8, Membership::Member, Membership::Unknown, ""},
                                    {6, Membership::NonMember, Membership::Unknown, ""}});
    CHECK_FALSE(bad.violations.empty());

    // B-side chain
    ChainReport rb = chain_report({{6, Membership::Unknown, Membership::Member, ""}});
    bool b4 = false;
    for (const auto& s : rb.implied)
        if (s.find("B_4") != std::string::npos) b4 = true;
    CHECK(b4);

    CHECK(chain_report({}).empty());
}

}  // TEST_SUITE
