#include "doctest.h"
#include "wdparam/json_io.hpp"
#include "wdparam/param_ops.hpp"

using namespace wdparam;

namespace {
FieldContext K3(3, 2);
}

TEST_CASE("field element round trip, including big integers") {
    FieldElem x = FieldElem::from_mpq(&K3, mpq_class("123456789012345678901234567890/7")) *
                  FieldElem::zeta(&K3, 1) * FieldElem::sqrt_q_pow(&K3, 1);
    FieldElem back = field_from_json(&K3, field_to_json(x), "/");
    CHECK(back == x);
    FieldElem z = FieldElem::zero(&K3);
    CHECK(field_from_json(&K3, field_to_json(z), "/") == z);
}

TEST_CASE("field element rejects malformed input with a pointer") {
    json bad = {{"coeffs", json::array({json::array({9, 0, 1, 1})})}};
    CHECK_THROWS_WITH_AS(field_from_json(&K3, bad, "/alpha"),
                         doctest::Contains("/alpha/coeffs/0"), validation_error);
}

TEST_CASE("parameter files round trip") {
    SemisimpleParam p(&K3, BaseField::F,
                      {IrredSummand{1, 2, FieldElem::from_int(&K3, 5)},
                       IrredSummand{0, 1, FieldElem::sqrt_q_pow(&K3, 1)}});
    ParsedParam back = param_from_json(param_to_json(p));
    CHECK(back.ss.summands().size() == 2);
    CHECK(back.ss.dimension() == 3);
    CHECK(back.base == BaseField::F);
    // contexts differ (owned), compare structurally
    CHECK(back.ss.summands()[1].zeta_exp == 1);
    CHECK(back.ss.summands()[1].f == 2);
}

TEST_CASE("segment files produce Weil-Deligne forms") {
    json j;
    j["q"] = 2;
    j["M"] = 3;
    j["segments"] = json::array();
    json seg;
    seg["summand"]["zeta"] = 0;
    seg["summand"]["alpha"]["coeffs"] = json::array({json::array({0, 0, 1, 1})});
    seg["d"] = 2;
    j["segments"].push_back(seg);
    ParsedParam p = param_from_json(j);
    REQUIRE(p.sl2.has_value());
    WDParam w = p.as_wd();
    CHECK(w.dimension() == 2);
    CHECK_FALSE(w.monodromy().is_zero());
}

TEST_CASE("explicit monodromy matrices are validated") {
    json j;
    j["q"] = 2;
    j["M"] = 1;
    j["summands"] = json::array();
    for (int alpha : {1, 2}) {
        json s;
        s["zeta"] = 0;
        s["alpha"]["coeffs"] = json::array({json::array({0, 0, alpha, alpha == 2 ? 4 : 1})});
        j["summands"].push_back(s);
    }
    // alphas 1 and 1/2 = q^{-1}: N linking them is legal one way only
    j["N"] = json::array({json::array({0, 0}), json::array({1, 0})});
    ParsedParam p = param_from_json(j);
    CHECK(p.wd.has_value());
    json bad = j;
    bad["N"] = json::array({json::array({0, 1}), json::array({0, 0})});
    CHECK_THROWS_AS(param_from_json(bad), validation_error);
}

TEST_CASE("classical group tag fixes the unitary parity") {
    json j;
    j["q"] = 2;
    j["M"] = 5;
    j["group"]["classical"] = "U";
    j["summands"] = json::array();
    json s;
    s["zeta"] = 1;
    s["alpha"]["coeffs"] = json::array({json::array({0, 0, 3, 1})});
    j["summands"].push_back(s);
    json s2 = s;
    s2["zeta"] = 2;
    s2["alpha"]["coeffs"] = json::array({json::array({0, 0, 1, 3})});
    j["summands"].push_back(s2);
    ParsedParam p = param_from_json(j);
    REQUIRE(p.classical.has_value());
    CHECK(*p.classical == ClassicalKind::Ueven);  // two f=2 orbits: dim 4
    CHECK(p.base == BaseField::E);
}

TEST_CASE("gamma divisor serialization round trip") {
    SemisimpleParam tau(&K3, BaseField::F, {IrredSummand{0, 1, FieldElem::one(&K3)}});
    SemisimpleParam phi(&K3, BaseField::F,
                        {IrredSummand{0, 1, FieldElem::from_int(&K3, 5)},
                         IrredSummand{1, 2, FieldElem::from_int(&K3, 7)}});
    GammaDivisor d = big_gamma(tau, phi);
    GammaDivisor back = gamma_divisor_from_json(&K3, gamma_divisor_to_json(d), "/");
    CHECK(back == d);
}

TEST_CASE("q-power pretty printing") {
    CHECK(FieldElem::sqrt_q_pow(&K3, -1).str() == "q^{-1/2}");
    CHECK(FieldElem::q_pow(&K3, 2).str() == "q^{2}");
    CHECK((-FieldElem::sqrt_q_pow(&K3, 3)).str() == "-q^{3/2}");
}
