#include "doctest.h"
#include "wdparam/local_factors.hpp"

using namespace wdparam;

namespace {
FieldContext K3(3, 2);
FieldElem fe(long v) { return FieldElem::from_int(&K3, v); }

SL2Param special_sl2(const FieldContext* K, unsigned d) {
    return SL2Param(K, BaseField::F, {Segment{IrredSummand{0, 1, FieldElem::one(K)}, d}});
}

RatFun one_over(Poly p) { return RatFun(Poly::one(p.ctx()), std::move(p)); }
}  // namespace

TEST_CASE("L-factor of an unramified character") {
    FieldElem a = fe(5);
    CHECK(l_factor(SemisimpleParam::character(a)) ==
          one_over(Poly::one_minus(a)));
}

TEST_CASE("ramified summands contribute no L-factor") {
    SemisimpleParam p(&K3, BaseField::F, {IrredSummand{1, 2, fe(5)}});
    CHECK(l_factor(p) == RatFun::one(&K3));
    CHECK(gamma_ratio(p) == RatFun::one(&K3));
}

TEST_CASE("steinberg golden value across q") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        FieldContext K(q % 3 == 0 ? 4 : 3, q);
        WDParam st = sl2_to_wd(special_sl2(&K, 2));
        CHECK(l_factor(st) == one_over(Poly::one_minus(FieldElem::sqrt_q_pow(&K, -1))));
    }
}

TEST_CASE("L-factor of a full 2-dim summand vs its kernel cut") {
    // ss part of the special parameter without monodromy: both lines count
    SemisimpleParam ss = semisimplify(special_sl2(&K3, 2));
    Poly expect = Poly::one_minus(FieldElem::sqrt_q_pow(&K3, 1)) *
                  Poly::one_minus(FieldElem::sqrt_q_pow(&K3, -1));
    CHECK(l_denominator(ss) == expect);
}

TEST_CASE("gamma of the trivial character has the laplacian divisor") {
    SemisimpleParam triv = SemisimpleParam::character(FieldElem::one(&K3));
    RatFun g = gamma_ratio(triv);
    // (1-T)/(1 - q^{-1}T^{-1}) normalizes to (1-T)/(1-qT) up to monomial
    RatFun expect(Poly::one_minus(fe(1)), Poly::one_minus(fe(2)));
    CHECK(g == expect.monomial_canonical());
    Divisor d = ratfun_divisor(g);
    CHECK(d.multiplicity(fe(1)) == 1);
    CHECK(d.multiplicity(FieldElem::q_pow(&K3, -1)) == -1);
}

TEST_CASE("gamma only depends on the semisimplification") {
    // special parameter: gamma of (ss, N) equals gamma of (ss, 0)
    for (unsigned d : {2u, 3u, 4u}) {
        WDParam w = sl2_to_wd(special_sl2(&K3, d));
        WDParam wss(w.ss());
        CHECK(gamma_ratio(w) == gamma_ratio(wss));
    }
    // and for a mixed parameter with a ramified part
    SL2Param p(&K3, BaseField::F,
               {Segment{IrredSummand{1, 2, fe(5)}, 2},
                Segment{IrredSummand{0, 1, fe(3)}, 1}});
    WDParam w = sl2_to_wd(p);
    CHECK(gamma_ratio(w) == gamma_ratio(WDParam(w.ss())));
}

TEST_CASE("gamma is multiplicative in direct sums") {
    SemisimpleParam a = SemisimpleParam::character(fe(3));
    SemisimpleParam b(&K3, BaseField::F, {IrredSummand{0, 1, fe(5)},
                                          IrredSummand{1, 2, fe(7)}});
    RatFun lhs = gamma_ratio(direct_sum(a, b));
    RatFun rhs = (gamma_ratio(a) * gamma_ratio(b)).monomial_canonical();
    CHECK(lhs == rhs);
}

TEST_CASE("pair divisor of the trivial character with itself") {
    SemisimpleParam triv = SemisimpleParam::character(FieldElem::one(&K3));
    GammaDivisor g = big_gamma(triv, triv);
    REQUIRE(g.families().size() == 1);
    const auto& fam = g.families()[0];
    CHECK(fam.orbit == 0);
    CHECK(fam.f == 1);
    CHECK(fam.div.multiplicity(fe(1)) == 2);
    CHECK(fam.div.multiplicity(FieldElem::q_pow(&K3, 1)) == -1);
    CHECK(fam.div.multiplicity(FieldElem::q_pow(&K3, -1)) == -1);
}

TEST_CASE("pair divisor vanishes without unramified twist relations") {
    SemisimpleParam tau = SemisimpleParam::character(fe(1));
    SemisimpleParam phi(&K3, BaseField::F, {IrredSummand{1, 2, fe(5)}});
    CHECK(big_gamma(tau, phi).empty());
}

TEST_CASE("pair divisor is additive in the second argument") {
    SemisimpleParam tau = SemisimpleParam::character(fe(1));
    SemisimpleParam phi = SemisimpleParam::character(fe(5));
    SemisimpleParam twice = direct_sum(phi, phi);
    CHECK(big_gamma(tau, twice) == big_gamma(tau, phi) * 2);
}

TEST_CASE("pair divisor against the matrix-level L-ratio oracle") {
    // tau = chi_1, phi = chi_a + chi_{a q^{-1}}: overlapping laplacians
    FieldElem a = fe(5);
    SemisimpleParam tau = SemisimpleParam::character(fe(1));
    SemisimpleParam phi(&K3, BaseField::F,
                        {IrredSummand{0, 1, a},
                         IrredSummand{0, 1, a * FieldElem::q_pow(&K3, -1)}});
    GammaDivisor got = big_gamma(tau, phi);

    // oracle: assemble the four L-denominators explicitly (f = 1, u = T)
    MonomialRep rt = MonomialRep::from_param(tau);
    MonomialRep rp = MonomialRep::from_param(phi);
    Poly den1 = l_denominator(MonomialRep::tensor(rt.dual(), rp));   // L(s, tau^* x phi)
    Poly den2 = l_denominator(MonomialRep::tensor(rt, rp.dual()));   // L(-s,...) base
    RatFun ratio =
        RatFun::from_poly(den1) *
        RatFun::from_poly(den2).subst_monomial(FieldElem::one(&K3), -1) /
        (RatFun::from_poly(den2).subst_monomial(FieldElem::q_pow(&K3, -1), -1) *
         RatFun::from_poly(den1).subst_monomial(FieldElem::q_pow(&K3, -1), 1));
    std::vector<FieldElem> cands;
    for (long j = -3; j <= 3; ++j) cands.push_back(a.inv() * FieldElem::q_pow(&K3, j));
    Divisor oracle = ratfun_divisor(ratio, cands);
    REQUIRE(got.families().size() == 1);
    CHECK(got.families()[0].div == oracle);
}

TEST_CASE("galois equivariance of the pair divisor") {
    FieldContext K5(5, 2);
    FieldElem a = FieldElem::from_int(&K5, 3);
    SemisimpleParam tau(&K5, BaseField::F, {IrredSummand{1, 4, FieldElem::one(&K5)}});
    SemisimpleParam phi(&K5, BaseField::F,
                        {IrredSummand{1, 4, a}, IrredSummand{0, 1, a}});
    for (long k : {2L, 3L}) {
        GammaDivisor lhs = big_gamma(tau, phi).galois(k, &K5, phi.q_act());
        GammaDivisor rhs = big_gamma(galois(tau, k), galois(phi, k));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gamma of a two-dim family lives on the T^2 chain") {
    // tau = phi = Ind_2(z, 1) at M=3: family f=2, divisor on u = T^2
    SemisimpleParam tau(&K3, BaseField::F, {IrredSummand{1, 2, fe(1)}});
    GammaDivisor g = big_gamma(tau, tau);
    REQUIRE(g.families().size() == 1);
    CHECK(g.families()[0].f == 2);
    CHECK(g.families()[0].div.multiplicity(fe(1)) == 2);
    CHECK(g.families()[0].div.multiplicity(FieldElem::q_pow(&K3, 2)) == -1);
    CHECK(g.families()[0].div.multiplicity(FieldElem::q_pow(&K3, -2)) == -1);

    // matrix oracle: L(s, tau^* x tau) = (1 - T^2)^{-1}
    MonomialRep rt = MonomialRep::from_param(tau);
    Poly den = l_denominator(MonomialRep::tensor(rt.dual(), rt));
    std::vector<FieldElem> c2{fe(1), fe(0), -fe(1)};
    CHECK(den == Poly(&K3, c2));
}
