#include <map>
#include <random>

#include "doctest.h"
#include "wdparam/converse.hpp"

using namespace wdparam;

namespace {
FieldContext K1(1, 2);
FieldContext K3(3, 2);
FieldContext K8(8, 3);

GammaOracle oracle_of(const SemisimpleParam& hidden) {
    return [hidden](const SemisimpleParam& tau) { return big_gamma(tau, hidden); };
}
}  // namespace

TEST_CASE("family enumeration") {
    // n=1, M=1: exactly the unramified family
    auto fams = enumerate_irreducibles(1, &K1);
    REQUIRE(fams.size() == 1);
    CHECK(fams[0].orbit == 0);
    CHECK(fams[0].f == 1);

    // n=2, M=3, q=2: families (0, f=1) and ({1,2}, f=2)
    auto fams3 = enumerate_irreducibles(2, &K3);
    REQUIRE(fams3.size() == 2);
    CHECK(fams3[0].f == 1);
    CHECK(fams3[1].orbit == 1);
    CHECK(fams3[1].f == 2);

    // n=2, M=8, q=3: orbits {0},{4} (f=1), {1,3},{2,6},{5,7} (f=2)
    auto fams8 = enumerate_irreducibles(2, &K8);
    CHECK(fams8.size() == 5);
    // and with n=1 only the fixed points remain
    CHECK(enumerate_irreducibles(1, &K8).size() == 2);
}

TEST_CASE("single character reconstructs") {
    FieldElem a = FieldElem::from_int(&K3, 5);
    SemisimpleParam hidden = SemisimpleParam::character(a);
    SemisimpleParam got = reconstruct(oracle_of(hidden), 1, &K3);
    CHECK(is_isomorphic(got, hidden));
}

TEST_CASE("single-summand deconvolution from a raw chain divisor") {
    // d = -[alpha q^{-f}] + 2[alpha] - [alpha q^{f}] on one chain -> m = 1 at alpha
    FieldElem a = FieldElem::from_int(&K3, 7);
    GammaOracle o = [&](const SemisimpleParam& tau) {
        GammaDivisor g;
        if (tau.summands()[0].zeta_exp != 0) return g;
        // chain coordinate u = 1/beta; beta = a puts the peak at u = a^{-1}
        FieldElem u = a.inv();
        g.add(0, 1, u, 2);
        g.add(0, 1, u * FieldElem::q_pow(&K3, 1), -1);
        g.add(0, 1, u * FieldElem::q_pow(&K3, -1), -1);
        return g;
    };
    SemisimpleParam got = reconstruct(o, 1, &K3);
    REQUIRE(got.summands().size() == 1);
    CHECK(got.summands()[0].alpha == a);
}

TEST_CASE("overlapping laplacians disentangle") {
    FieldElem a = FieldElem::from_int(&K3, 5);
    SemisimpleParam hidden(&K3, BaseField::F,
                           {IrredSummand{0, 1, a},
                            IrredSummand{0, 1, a * FieldElem::q_pow(&K3, -1)}});
    SemisimpleParam got = reconstruct(oracle_of(hidden), 2, &K3);
    CHECK(is_isomorphic(got, hidden));
}

TEST_CASE("mixed families reconstruct, including an f=2 orbit") {
    FieldElem a = FieldElem::from_int(&K3, 5);
    SemisimpleParam hidden(&K3, BaseField::F,
                           {IrredSummand{1, 2, a},
                            IrredSummand{0, 1, FieldElem::from_int(&K3, -2)},
                            IrredSummand{0, 1, FieldElem::from_int(&K3, -2)}});
    SemisimpleParam got = reconstruct(oracle_of(hidden), 4, &K3);
    CHECK(is_isomorphic(got, hidden));
}

TEST_CASE("multiplicity towers on one chain") {
    FieldElem a = FieldElem::from_int(&K3, 3);
    std::vector<IrredSummand> s;
    for (int i = 0; i < 3; ++i) s.push_back(IrredSummand{0, 1, a});
    s.push_back(IrredSummand{0, 1, a * FieldElem::q_pow(&K3, -2)});
    SemisimpleParam hidden(&K3, BaseField::F, s);
    CHECK(is_isomorphic(reconstruct(oracle_of(hidden), 4, &K3), hidden));
}

TEST_CASE("inconsistent oracle is rejected with the offending chain") {
    GammaOracle bad = [&](const SemisimpleParam& tau) {
        GammaDivisor g;
        if (tau.summands()[0].zeta_exp == 0 && tau.summands()[0].f == 1)
            g.add(0, 1, FieldElem::one(&K3), 1);  // lone +1 cannot be a laplacian
        return g;
    };
    CHECK_THROWS_AS(reconstruct(bad, 1, &K3), compute_error);
}

TEST_CASE("negative multiplicity is rejected") {
    GammaOracle bad = [&](const SemisimpleParam& tau) {
        GammaDivisor g;
        if (tau.summands()[0].zeta_exp == 0 && tau.summands()[0].f == 1) {
            g.add(0, 1, FieldElem::one(&K3), -2);
            g.add(0, 1, FieldElem::q_pow(&K3, 1), 1);
            g.add(0, 1, FieldElem::q_pow(&K3, -1), 1);
        }
        return g;
    };
    CHECK_THROWS_AS(reconstruct(bad, 1, &K3), compute_error);
}

TEST_CASE("deconvolution operator is injective on random finite supports") {
    // forward-apply the laplacian to random m >= 0 and recover it
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> m(6, 0);
        for (auto& v : m) v = static_cast<long>(rng() % 3);
        // build the divisor of sum m_k at positions k
        GammaDivisor g;
        FieldElem base = FieldElem::from_int(&K3, 5);
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            FieldElem u = base * FieldElem::q_pow(&K3, -static_cast<long>(k)).inv();
            g.add(0, 1, u, static_cast<int>(2 * m[k]));
            g.add(0, 1, u * FieldElem::q_pow(&K3, 1), static_cast<int>(-m[k]));
            g.add(0, 1, u * FieldElem::q_pow(&K3, -1), static_cast<int>(-m[k]));
        }
        GammaOracle o = [&](const SemisimpleParam& tau) {
            return tau.summands()[0].f == 1 && tau.summands()[0].zeta_exp == 0
                       ? g
                       : GammaDivisor{};
        };
        SemisimpleParam got = reconstruct(o, 32, &K3);
        // recovered multiset must match m
        std::map<FieldElem, long> expect;
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            FieldElem beta = (base * FieldElem::q_pow(&K3, -static_cast<long>(k)).inv()).inv();
            expect[beta] += m[k];
        }
        std::map<FieldElem, long> gotm;
        for (const auto& s : got.summands()) gotm[s.alpha] += 1;
        CHECK(gotm == expect);
    }
}

TEST_CASE("distinct chains never collide") {
    // ramified and unramified chains stay separate
    FieldElem a = FieldElem::from_int(&K3, 5);
    SemisimpleParam hidden(&K3, BaseField::F,
                           {IrredSummand{1, 2, a}, IrredSummand{0, 1, a}});
    GammaDivisor g0 = big_gamma(
        SemisimpleParam(&K3, BaseField::F, {IrredSummand{0, 1, FieldElem::one(&K3)}}),
        hidden);
    REQUIRE(g0.families().size() == 1);
    CHECK(g0.families()[0].orbit == 0);
    GammaDivisor g1 = big_gamma(
        SemisimpleParam(&K3, BaseField::F, {IrredSummand{1, 2, FieldElem::one(&K3)}}),
        hidden);
    REQUIRE(g1.families().size() == 1);
    CHECK(g1.families()[0].orbit == 1);
}

TEST_CASE("dimension overflow is rejected") {
    FieldElem a = FieldElem::from_int(&K3, 5);
    SemisimpleParam hidden(&K3, BaseField::F,
                           {IrredSummand{0, 1, a}, IrredSummand{0, 1, a},
                            IrredSummand{0, 1, a}});
    CHECK_THROWS_WITH_AS(reconstruct(oracle_of(hidden), 2, &K3),
                         doctest::Contains("exceeds"), compute_error);
}
