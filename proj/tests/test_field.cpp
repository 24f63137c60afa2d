#include "doctest.h"
#include "wdparam/field.hpp"

using namespace wdparam;

TEST_CASE("sqrt(q) squares to q") {
    for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
        FieldContext K(5, q == 5 ? 2 : q);  // keep p coprime to M
        if (q == 5) continue;
        FieldElem r = FieldElem::sqrt_q_pow(&K, 1);
        CHECK(r * r == FieldElem::from_int(&K, K.q()));
    }
    FieldContext K(4, 5);
    FieldElem r = FieldElem::sqrt_q_pow(&K, 1);
    CHECK(r * r == FieldElem::from_int(&K, 5));
}

TEST_CASE("zeta has exact order M") {
    FieldContext K(12, 5);
    FieldElem z = FieldElem::zeta(&K, 1);
    FieldElem acc = FieldElem::one(&K);
    for (int i = 1; i < 12; ++i) {
        acc = acc * z;
        CHECK_FALSE(acc.is_one());
    }
    CHECK((acc * z).is_one());
}

TEST_CASE("field axioms on a mixed sample") {
    FieldContext K(8, 3);
    FieldElem z = FieldElem::zeta(&K, 1);
    FieldElem r = FieldElem::sqrt_q_pow(&K, 1);
    FieldElem a = z + r * FieldElem::from_int(&K, 2);
    FieldElem b = z * z - FieldElem::from_mpq(&K, mpq_class(1, 3)) * r;
    FieldElem c = a * b;
    CHECK(c == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * a.inv()).is_one());
    CHECK((b / b).is_one());
    CHECK((a - a).is_zero());
}

TEST_CASE("inverse in the folded (square q) case") {
    FieldContext K(3, 4);
    CHECK(K.sqrt_q_is_integer());
    FieldElem a = FieldElem::zeta(&K, 1) + FieldElem::sqrt_q_pow(&K, 1);
    CHECK((a * a.inv()).is_one());
    CHECK(FieldElem::sqrt_q_pow(&K, 1) == FieldElem::from_int(&K, 2));
}

TEST_CASE("galois action fixes sqrt(q) and respects multiplication") {
    FieldContext K(7, 2);
    FieldElem z = FieldElem::zeta(&K, 1);
    FieldElem r = FieldElem::sqrt_q_pow(&K, 1);
    FieldElem x = z + r;
    // sigma_{-1}(zeta + sqrt q) = zeta^{-1} + sqrt q
    CHECK(x.galois(-1) == FieldElem::zeta(&K, -1) + r);
    FieldElem y = z * z + FieldElem::from_int(&K, 3) * r;
    for (long k : {2L, 3L, 5L}) {
        CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
        CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
    }
    CHECK(r.galois(3) == r);
    CHECK_THROWS_AS(x.galois(7), validation_error);
}

TEST_CASE("monomial detection and canonical representative") {
    FieldContext K(12, 5);
    FieldElem v = FieldElem::from_int(&K, -3) * FieldElem::zeta(&K, 4) *
                  FieldElem::sqrt_q_pow(&K, 1);
    auto m = v.as_monomial();
    REQUIRE(m.has_value());
    CHECK(FieldElem::from_monomial(&K, *m) == v);
    CHECK(m->sqrt_pow == 1);
    // zeta^4 at M=12 is a primitive cube root; not a power-basis monomial
    // but still monomial form.
    FieldElem w = FieldElem::zeta(&K, 1) + FieldElem::one(&K);
    CHECK_FALSE(w.as_monomial().has_value());
}

TEST_CASE("ell-adic valuation of monomials") {
    FieldContext K(8, 3);
    FieldElem x = FieldElem::from_mpq(&K, mpq_class(50, 7)) * FieldElem::zeta(&K, 3);
    CHECK(ell_valuation(x, 5) == 2);
    CHECK(ell_valuation(x, 7) == -1);
    CHECK(ell_valuation(x, 11) == 0);
    CHECK_THROWS_AS(ell_valuation(x, 3), validation_error);  // ell = p
    FieldElem bad = FieldElem::zeta(&K, 1) + FieldElem::one(&K);
    CHECK_THROWS_AS(ell_valuation(bad, 5), compute_error);
}

TEST_CASE("q-power recognition") {
    FieldContext K(3, 4);
    CHECK(FieldElem::q_pow(&K, -2).as_q_power() == -2);
    CHECK(FieldElem::from_int(&K, 16).as_q_power() == 2);
    CHECK_FALSE(FieldElem::from_int(&K, 3).as_q_power().has_value());
}
