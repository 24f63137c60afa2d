#include <random>

#include "doctest.h"
#include "wdparam/param_ops.hpp"

using namespace wdparam;

namespace {
FieldContext K3(3, 2);   // M=3, q=2: orbits {0}, {1,2}
FieldContext K12(12, 5); // M=12, q=5

FieldElem fe(const FieldContext* K, long v) { return FieldElem::from_int(K, v); }
}  // namespace

TEST_CASE("summand canonicalization picks the minimal orbit representative") {
    SemisimpleParam a(&K3, BaseField::F, {IrredSummand{2, 0, fe(&K3, 3)}});
    CHECK(a.summands()[0].zeta_exp == 1);
    CHECK(a.summands()[0].f == 2);
    SemisimpleParam b(&K3, BaseField::F, {IrredSummand{1, 2, fe(&K3, 3)}});
    CHECK(is_isomorphic(a, b));
    CHECK_THROWS_AS(SemisimpleParam(&K3, BaseField::F, {IrredSummand{1, 1, fe(&K3, 3)}}),
                    validation_error);
}

TEST_CASE("realize produces the cyclic model and the tame relation") {
    // spec shape: zeta of order 3, q = 2 mod 3, f = 2:
    // Sigma = diag(z, z^2), Phi = [[0, a], [1, 0]]
    FieldElem a = fe(&K3, 5);
    SemisimpleParam p(&K3, BaseField::F, {IrredSummand{1, 2, a}});
    Realization r = realize(p);
    CHECK(r.sigma.at(0, 0) == FieldElem::zeta(&K3, 1));
    CHECK(r.sigma.at(1, 1) == FieldElem::zeta(&K3, 2));
    CHECK(r.phi.at(0, 1) == a);
    CHECK(r.phi.at(1, 0) == FieldElem::one(&K3));
    // Phi^{-1} Sigma Phi = Sigma^q
    CHECK(r.phi.inverse() * r.sigma * r.phi == r.sigma.pow(K3.q()));
    // Phi^f = alpha on the block
    CHECK(r.phi.pow(2) == Matrix::identity(&K3, 2) * a);
}

TEST_CASE("unramified character realization") {
    FieldElem a = fe(&K3, 7);
    SemisimpleParam p = SemisimpleParam::character(a);
    Realization r = realize(p);
    CHECK(r.phi.at(0, 0) == a);
    CHECK(r.sigma.at(0, 0).is_one());
}

TEST_CASE("steinberg-type semisimple part with half powers of q") {
    // summands {(1,1,q^{-1/2}), (1,1,q^{1/2})}: Phi = diag(q^{-1/2}, q^{1/2})
    const FieldContext* K = &K3;
    SemisimpleParam p(K, BaseField::F,
                      {IrredSummand{0, 1, FieldElem::sqrt_q_pow(K, -1)},
                       IrredSummand{0, 1, FieldElem::sqrt_q_pow(K, 1)}});
    Realization r = realize(p);
    // canonical sort puts q^{1/2} (denominator 1) first
    CHECK(r.phi.at(0, 0) == FieldElem::sqrt_q_pow(K, 1));
    CHECK(r.phi.at(1, 1) == FieldElem::sqrt_q_pow(K, -1));
    CHECK(r.phi.at(0, 1).is_zero());
    CHECK(r.sigma == Matrix::identity(K, 2));
    CHECK(is_isomorphic(dual(p), p));  // eigenvalues {q^{1/2}, q^{-1/2}} stable
}

TEST_CASE("decompose inverts realize") {
    FieldElem a = fe(&K3, 5), b = fe(&K3, -2);
    SemisimpleParam p(&K3, BaseField::F,
                      {IrredSummand{1, 2, a}, IrredSummand{0, 1, b},
                       IrredSummand{0, 1, b}});
    Realization r = realize(p);
    SemisimpleParam back = decompose(r.phi, r.sigma, BaseField::F, {a, b});
    CHECK(is_isomorphic(back, p));
}

TEST_CASE("decompose of diagonal pair") {
    Matrix phi(&K3, 2, 2), sigma = Matrix::identity(&K3, 2);
    phi.at(0, 0) = fe(&K3, 4);
    phi.at(1, 1) = fe(&K3, 9);
    SemisimpleParam p = decompose(phi, sigma, BaseField::F, {fe(&K3, 4), fe(&K3, 9)});
    CHECK(p.summands().size() == 2);
    CHECK(p.summands()[0].alpha == fe(&K3, 4));
    CHECK(p.summands()[1].alpha == fe(&K3, 9));
}

TEST_CASE("decompose reports missing candidates") {
    Matrix phi(&K3, 1, 1), sigma = Matrix::identity(&K3, 1);
    phi.at(0, 0) = fe(&K3, 4);
    CHECK_THROWS_WITH_AS(decompose(phi, sigma, BaseField::F, {fe(&K3, 5)}),
                         doctest::Contains("missing candidate"), compute_error);
}

TEST_CASE("characters multiply under tensor") {
    FieldElem a = fe(&K3, 5), b = fe(&K3, 7);
    auto t = tensor(SemisimpleParam::character(a), SemisimpleParam::character(b));
    CHECK(is_isomorphic(t, SemisimpleParam::character(a * b)));
}

TEST_CASE("unramified twist of a two-dimensional summand") {
    FieldElem a = fe(&K3, 5), c = fe(&K3, 3);
    SemisimpleParam p(&K3, BaseField::F, {IrredSummand{1, 2, a}});
    auto tw = twist_unramified(p, c);
    CHECK(tw.summands()[0].alpha == a * c * c);
    // matrix-level oracle: scaled Frobenius realization decomposes to the twist
    MonomialRep rep = MonomialRep::from_param(p).scale_frobenius(c);
    CHECK(is_isomorphic(rep.to_param(), tw));
}

TEST_CASE("tensor against the matrix-level oracle") {
    FieldElem a = fe(&K3, 5);
    SemisimpleParam p(&K3, BaseField::F, {IrredSummand{1, 2, a}});
    SemisimpleParam pd = dual(p);
    SemisimpleParam t = tensor(p, pd);
    CHECK(t.dimension() == 4);
    // Ind_2(z,a) (x) Ind_2(z^-1,a^-1): invariants contain the trivial character
    // twice-ish: verify via generic matrix decompose with harvested candidates.
    MonomialRep rt = MonomialRep::tensor(MonomialRep::from_param(p),
                                         MonomialRep::from_param(pd));
    std::vector<FieldElem> cands;
    for (const auto& s : t.summands()) cands.push_back(s.alpha);
    SemisimpleParam back = decompose(rt.phi_matrix(), rt.sigma_matrix(), BaseField::F, cands);
    CHECK(is_isomorphic(back, t));
}

TEST_CASE("sym2/ext2 of a character and of a 2-dim summand") {
    FieldElem a = fe(&K3, 5);
    auto [s2, e2] = sym2_ext2(SemisimpleParam::character(a));
    CHECK(is_isomorphic(s2, SemisimpleParam::character(a * a)));
    CHECK(e2.dimension() == 0);

    SemisimpleParam p(&K3, BaseField::F, {IrredSummand{1, 2, a}});
    auto [s2b, e2b] = sym2_ext2(p);
    CHECK(s2b.dimension() == 3);
    CHECK(e2b.dimension() == 1);
    // wedge^2(Ind_2(z, a)) = (z^{1+q} orbit char, f=1, -a)
    CHECK(e2b.summands()[0].zeta_exp == 0);  // 1+2 = 3 = 0 mod 3
    CHECK(e2b.summands()[0].alpha == -a);
}

TEST_CASE("sym2 + ext2 = tensor square") {
    FieldElem a = fe(&K3, 5), b = fe(&K3, -1);
    SemisimpleParam p(&K3, BaseField::F,
                      {IrredSummand{1, 2, a}, IrredSummand{0, 1, b}});
    auto [s2, e2] = sym2_ext2(p);
    CHECK(is_isomorphic(direct_sum(s2, e2), tensor(p, p)));
    CHECK(s2.dimension() + e2.dimension() == p.dimension() * p.dimension());
}

TEST_CASE("frobenius semisimplification") {
    // Phi = [[a, 1], [0, a]] -> Phi_ss = diag(a,a), u = [[1, 1/a],[0,1]]
    FieldElem a = fe(&K3, 3);
    Matrix phi(&K3, 2, 2), sigma = Matrix::identity(&K3, 2);
    phi.at(0, 0) = a;
    phi.at(0, 1) = FieldElem::one(&K3);
    phi.at(1, 1) = a;
    auto j = frobenius_ss(phi, sigma, {a});
    CHECK(j.phi_ss.at(0, 0) == a);
    CHECK(j.phi_ss.at(0, 1).is_zero());
    CHECK(j.unipotent.at(0, 1) == a.inv());
    CHECK(j.phi_ss * j.unipotent == phi);

    // semisimple input: u = 1
    Matrix phi2(&K3, 2, 2);
    phi2.at(0, 0) = FieldElem::sqrt_q_pow(&K3, -1);
    phi2.at(1, 1) = FieldElem::sqrt_q_pow(&K3, 1);
    auto j2 = frobenius_ss(phi2, sigma,
                           {FieldElem::sqrt_q_pow(&K3, -1), FieldElem::sqrt_q_pow(&K3, 1)});
    CHECK(j2.unipotent == Matrix::identity(&K3, 2));
    CHECK(j2.phi_ss == phi2);
}

TEST_CASE("galois commutes with tensor") {
    FieldElem a = fe(&K12, 7) * FieldElem::zeta(&K12, 4);
    FieldElem b = fe(&K12, 2);
    SemisimpleParam p(&K12, BaseField::F, {IrredSummand{1, 2, a}});
    SemisimpleParam r(&K12, BaseField::F, {IrredSummand{0, 1, b}});
    for (long k : {5L, 7L, 11L}) {
        CHECK(is_isomorphic(galois(tensor(p, r), k), tensor(galois(p, k), galois(r, k))));
    }
}

TEST_CASE("conjugate dual over E") {
    FieldContext K5(5, 2);  // E-orbits under q^2 = 4 mod 5: {1,4}, {2,3}
    FieldElem a = fe(&K5, 3);
    SemisimpleParam rho(&K5, BaseField::E, {IrredSummand{1, 2, a}});
    CHECK(rho.summands()[0].f == 2);
    SemisimpleParam cd = conj_dual(rho);
    // conj: exponent *2 -> orbit {2,3}; dual: negate -> {3,2} -> canonical 2
    CHECK(cd.summands()[0].zeta_exp == 2);
    CHECK(cd.summands()[0].alpha == a.inv());
    CHECK_THROWS_AS(conj(SemisimpleParam::character(a)), validation_error);
}

TEST_CASE("asai restriction property on characters") {
    FieldContext K5(5, 2);
    FieldElem b = fe(&K5, 9);
    SemisimpleParam rho = SemisimpleParam::character(b, BaseField::E);
    SemisimpleParam as_plus = asai(rho, true);
    CHECK(as_plus.dimension() == 1);
    // As^+(chi_b) is chi_b as an F-character (transfer sends Fr_F to Fr_E);
    // its restriction to W_E is then chi_{b^2} = chi_b (x) chi_b^c.
    CHECK(as_plus.summands()[0].alpha == b);
    SemisimpleParam restr = MonomialRep::from_param(as_plus).restrict_to_E().to_param();
    CHECK(is_isomorphic(restr, tensor(rho, conj(rho))));
    SemisimpleParam as_minus = asai(rho, false);
    CHECK(as_minus.summands()[0].alpha == -as_plus.summands()[0].alpha);
}

TEST_CASE("asai dimension and restriction for a 2-dim parameter") {
    FieldContext K5(5, 2);
    FieldElem a = fe(&K5, 4);  // square, so tensor-induction blocks split
    SemisimpleParam rho(&K5, BaseField::E, {IrredSummand{1, 2, a}});
    SemisimpleParam ap = asai(rho, true);
    CHECK(ap.dimension() == 4);
    // restriction to W_E equals rho (x) rho^c
    MonomialRep as_rep = MonomialRep::from_param(rho).asai(false);
    SemisimpleParam restr = as_rep.restrict_to_E().to_param();
    SemisimpleParam expect = tensor(rho, conj(rho));
    CHECK(is_isomorphic(restr, expect));
}

TEST_CASE("realize/decompose round trip on random parameters") {
    std::mt19937_64 rng(11);
    FieldContext K8(8, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IrredSummand> summands;
        unsigned budget = 1 + rng() % 4;
        std::vector<FieldElem> cands;
        while (budget > 0) {
            unsigned e = rng() % 8;
            unsigned f = orbit_size(e, 3, 8);
            if (f > budget) continue;
            long c = 1 + static_cast<long>(rng() % 5);
            FieldElem a = FieldElem::from_int(&K8, (rng() & 1) ? c : -c) *
                          FieldElem::sqrt_q_pow(&K8, static_cast<long>(rng() % 3) - 1);
            summands.push_back(IrredSummand{e, f, a});
            cands.push_back(a);
            budget -= f;
        }
        SemisimpleParam p(&K8, BaseField::F, summands);
        Realization r = realize(p);
        CHECK(is_isomorphic(decompose(r.phi, r.sigma, BaseField::F, cands), p));
    }
}

TEST_CASE("isomorphism separates parameters differing in one eigenvalue") {
    FieldContext K8(8, 3);
    SemisimpleParam a(&K8, BaseField::F,
                      {IrredSummand{1, 2, FieldElem::from_int(&K8, 3)},
                       IrredSummand{0, 1, FieldElem::from_int(&K8, 2)},
                       IrredSummand{2, 2, FieldElem::from_int(&K8, 5)}});
    SemisimpleParam b(&K8, BaseField::F,
                      {IrredSummand{1, 2, FieldElem::from_int(&K8, 3)},
                       IrredSummand{0, 1, FieldElem::from_int(&K8, 2)},
                       IrredSummand{2, 2, FieldElem::from_int(&K8, 7)}});
    CHECK(is_isomorphic(a, a));
    CHECK_FALSE(is_isomorphic(a, b));
}
