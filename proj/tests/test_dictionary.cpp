#include <random>

#include "doctest.h"
#include "wdparam/dictionary.hpp"

using namespace wdparam;

namespace {
FieldContext K3(3, 2);
FieldElem fe(long v) { return FieldElem::from_int(&K3, v); }

SL2Param special_sl2(unsigned d) {
    return SL2Param(&K3, BaseField::F,
                    {Segment{IrredSummand{0, 1, FieldElem::one(&K3)}, d}});
}
}  // namespace

TEST_CASE("special segment d=2: eigenvalues and monodromy direction") {
    WDParam w = sl2_to_wd(special_sl2(2));
    REQUIRE(w.ss().summands().size() == 2);
    CHECK(w.ss().summands()[0].alpha == FieldElem::sqrt_q_pow(&K3, 1));
    CHECK(w.ss().summands()[1].alpha == FieldElem::sqrt_q_pow(&K3, -1));
    // N maps the q^{1/2} line onto the q^{-1/2} line
    CHECK(w.monodromy().at(1, 0).is_one());
    CHECK(w.monodromy().at(0, 1).is_zero());
    Realization r = realize(w.ss());
    CHECK(r.phi * w.monodromy() * r.phi.inverse() ==
          w.monodromy() * FieldElem::q_pow(&K3, -1));
}

TEST_CASE("trivial segment keeps N = 0") {
    SL2Param p(&K3, BaseField::F, {Segment{IrredSummand{1, 2, fe(5)}, 1}});
    WDParam w = sl2_to_wd(p);
    CHECK(w.monodromy().is_zero());
    CHECK(is_isomorphic(w.ss(), SemisimpleParam(&K3, BaseField::F, {IrredSummand{1, 2, fe(5)}})));
}

TEST_CASE("special segment d=3: eigenvalues q, 1, q^{-1} and rank 2") {
    WDParam w = sl2_to_wd(special_sl2(3));
    std::vector<FieldElem> expect = {FieldElem::q_pow(&K3, 1), FieldElem::one(&K3),
                                     FieldElem::q_pow(&K3, -1)};
    std::vector<FieldElem> got;
    for (const auto& s : w.ss().summands()) got.push_back(s.alpha);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
    CHECK(w.monodromy().rank() == 2);
    CHECK((w.monodromy() * w.monodromy()).rank() == 1);
}

TEST_CASE("rank-1 link between two characters is one d=2 segment") {
    SemisimpleParam ss(&K3, BaseField::F,
                       {IrredSummand{0, 1, FieldElem::one(&K3)},
                        IrredSummand{0, 1, FieldElem::q_pow(&K3, -1)}});
    auto off = block_offsets(ss);
    size_t top = ss.summands()[0].alpha.is_one() ? 0 : 1;
    Matrix N(&K3, 2, 2);
    N.at(off[1 - top], off[top]) = FieldElem::one(&K3);
    WDParam w(ss, N);
    SL2Param p = wd_to_sl2(w);
    REQUIRE(p.segments().size() == 1);
    CHECK(p.segments()[0].d == 2);
    CHECK(p.segments()[0].sigma.alpha == FieldElem::sqrt_q_pow(&K3, -1));
}

TEST_CASE("zero monodromy gives all d=1 segments") {
    SemisimpleParam ss(&K3, BaseField::F,
                       {IrredSummand{0, 1, FieldElem::one(&K3)},
                        IrredSummand{0, 1, FieldElem::one(&K3)}});
    SL2Param p = wd_to_sl2(WDParam(ss));
    REQUIRE(p.segments().size() == 2);
    CHECK(p.segments()[0].d == 1);
    CHECK(p.segments()[1].d == 1);
}

TEST_CASE("dictionary round trip on structured samples") {
    std::vector<SL2Param> samples;
    samples.push_back(special_sl2(2));
    samples.push_back(special_sl2(4));
    samples.push_back(SL2Param(&K3, BaseField::F,
                               {Segment{IrredSummand{0, 1, fe(3)}, 2},
                                Segment{IrredSummand{0, 1, fe(3)}, 1}}));
    samples.push_back(SL2Param(&K3, BaseField::F,
                               {Segment{IrredSummand{1, 2, fe(5)}, 2},
                                Segment{IrredSummand{0, 1, fe(-1)}, 3}}));
    samples.push_back(SL2Param(
        &K3, BaseField::F,
        {Segment{IrredSummand{0, 1, fe(3)}, 3},
         Segment{IrredSummand{0, 1, fe(3) * FieldElem::q_pow(&K3, -1)}, 1}}));
    for (const auto& p : samples) {
        WDParam w = sl2_to_wd(p);
        CHECK(wd_to_sl2(w) == p);
        CHECK(is_isomorphic(semisimplify(p), semisimplify(w)));
        CHECK(wd_isomorphic(sl2_to_wd(wd_to_sl2(w)), w));
    }
}

TEST_CASE("nu chains spot the lattice structure") {
    SemisimpleParam ss(&K3, BaseField::F,
                       {IrredSummand{0, 1, fe(3)},
                        IrredSummand{0, 1, fe(3) * FieldElem::q_pow(&K3, -2)},
                        IrredSummand{0, 1, fe(5)}});
    auto ch = nu_chains(ss);
    REQUIRE(ch.size() == 2);
    const NuChain& c3 = ch[0].alphas[0] == fe(3) ? ch[0] : ch[1];
    CHECK(c3.length() == 3);
    CHECK(c3.multiplicity(0) == 1);
    CHECK(c3.multiplicity(1) == 0);
    CHECK(c3.multiplicity(2) == 1);
}

TEST_CASE("the two semisimplification routes agree on random parameters") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Segment> segs;
        unsigned budget = 1 + rng() % 5;
        while (budget > 0) {
            unsigned e = rng() % 3;
            unsigned f = orbit_size(e, 2, 3);
            if (f > budget) continue;
            unsigned d = 1 + rng() % (budget / f);
            long c = 1 + static_cast<long>(rng() % 7);
            segs.push_back(Segment{IrredSummand{e, f, fe(c)}, d});
            budget -= f * d;
        }
        SL2Param p(&K3, BaseField::F, segs);
        CHECK(is_isomorphic(semisimplify(p), semisimplify(sl2_to_wd(p))));
    }
}
