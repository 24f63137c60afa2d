#include "doctest.h"
#include "wdparam/divisor.hpp"

using namespace wdparam;

namespace {
FieldContext K(3, 2);
FieldElem fe(long v) { return FieldElem::from_int(&K, v); }
}  // namespace

TEST_CASE("polynomial arithmetic and division") {
    Poly a = Poly::one_minus(fe(1)) * Poly::one_minus(fe(2));
    Poly b = Poly::one_minus(fe(2));
    auto [q, r] = a.divrem(b);
    CHECK(r.is_zero());
    CHECK(q == Poly::one_minus(fe(1)));
    CHECK(Poly::gcd(a, b).monic() == b.monic());
}

TEST_CASE("rational function reduction and canonical monomial class") {
    RatFun f(Poly::one_minus(fe(1)) * Poly::one_minus(fe(2)), Poly::one_minus(fe(2)));
    CHECK(f == RatFun::from_poly(Poly::one_minus(fe(1))));
    // T*(1-T)/(1-2T) is monomially equivalent to (1-T)/(1-2T)
    RatFun g(Poly::monomial(fe(3), 1) * Poly::one_minus(fe(1)), Poly::one_minus(fe(2)));
    RatFun h(Poly::one_minus(fe(1)), Poly::one_minus(fe(2)));
    CHECK(g.monomial_canonical() == h.monomial_canonical());
    CHECK(g != h);
}

TEST_CASE("monomial normalization is multiplicative") {
    RatFun f(Poly::monomial(fe(5), 2) * Poly::one_minus(fe(1)), Poly::one_minus(fe(4)));
    RatFun g(Poly::one_minus(fe(3)), Poly::monomial(fe(7), 1));
    auto lhs = (f * g).monomial_canonical();
    auto rhs = (f.monomial_canonical() * g.monomial_canonical()).monomial_canonical();
    CHECK(lhs == rhs);
}

TEST_CASE("Laurent substitution T -> c/T") {
    // f = 1 - aT at T -> q^{-1}T^{-1} should equal 1 - a q^{-1} T^{-1}
    // = -(a q^{-1}) T^{-1} (1 - q a^{-1} T), i.e. up to monomial 1 - (q/a) T.
    FieldElem a = fe(3);
    RatFun f = RatFun::from_poly(Poly::one_minus(a));
    RatFun g = f.subst_monomial(FieldElem::q_pow(&K, -1), -1);
    RatFun expect = RatFun::from_poly(
        Poly::one_minus(FieldElem::q_pow(&K, 1) * a.inv()));
    CHECK(g.monomial_canonical() == expect.monomial_canonical());
}

TEST_CASE("divisor of split rational functions") {
    // (1-T)/(1-qT) -> {T=1: +1, T=q^{-1}: -1}
    RatFun f(Poly::one_minus(fe(1)), Poly::one_minus(fe(2)));
    Divisor d = ratfun_divisor(f);
    CHECK(d.size() == 2);
    CHECK(d.multiplicity(fe(1)) == 1);
    CHECK(d.multiplicity(FieldElem::q_pow(&K, -1)) == -1);

    // constant -> empty
    CHECK(ratfun_divisor(RatFun::one(&K)).empty());

    // (1-T)^2 / ((1-q^{-1}T)(1-qT)) -> {1:+2, q:-1, q^{-1}:-1}
    RatFun g(Poly::one_minus(fe(1)) * Poly::one_minus(fe(1)),
             Poly::one_minus(FieldElem::q_pow(&K, -1)) * Poly::one_minus(fe(2)));
    Divisor dg = ratfun_divisor(g);
    CHECK(dg.multiplicity(fe(1)) == 2);
    CHECK(dg.multiplicity(fe(2)) == -1);
    CHECK(dg.multiplicity(FieldElem::q_pow(&K, -1)) == -1);
}

TEST_CASE("divisor is additive under multiplication") {
    RatFun f(Poly::one_minus(fe(1)), Poly::one_minus(fe(2)));
    RatFun g(Poly::one_minus(fe(4)) * Poly::one_minus(fe(1)), Poly::one(&K));
    CHECK(ratfun_divisor(f * g) == ratfun_divisor(f) + ratfun_divisor(g));
}

TEST_CASE("divisor vanishes exactly on monomials") {
    RatFun m(Poly::monomial(fe(7), 3), Poly::one(&K));
    CHECK(ratfun_divisor(m).empty());
    CHECK(m.is_monomial());
    RatFun f(Poly::one_minus(fe(1)), Poly::one(&K));
    CHECK_FALSE(ratfun_divisor(f).empty());
}

TEST_CASE("non-split factor is reported") {
    // 1 - 3T^2 has roots +-sqrt(3) which are not in Q(zeta_3, sqrt 2)
    std::vector<FieldElem> coeffs{fe(1), fe(0), fe(-3)};
    RatFun f = RatFun::from_poly(Poly(&K, coeffs));
    CHECK_THROWS_AS(ratfun_divisor(f), compute_error);
}

TEST_CASE("galois acts on divisors") {
    FieldContext K5(5, 2);
    FieldElem z = FieldElem::zeta(&K5, 1);
    // 1 - zT vanishes at T = z^{-1} = z^4
    RatFun f = RatFun::from_poly(Poly::one_minus(z));
    Divisor d = ratfun_divisor(f, {z.inv()});
    CHECK(d.multiplicity(FieldElem::zeta(&K5, 4)) == 1);
    Divisor dg = d.galois(2);
    CHECK(dg.multiplicity(FieldElem::zeta(&K5, 3)) == 1);
}
