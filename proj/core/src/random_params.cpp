#include "wdparam/random_params.hpp"

#include "wdparam/monodromy.hpp"

namespace wdparam {

FieldElem random_alpha(ParamRng& rng, const FieldContext* ctx, bool squares) {
    static const long kNums[] = {1, 2, 3, 5, 7, 6, 10};
    long c = kNums[rng.below(sizeof(kNums) / sizeof(kNums[0]))];
    mpq_class cq(c);
    if (rng.coin()) cq = 1 / cq;
    if (!squares && rng.coin()) cq = -cq;
    long a = rng.range(0, static_cast<long>(ctx->M()) - 1);
    long b = rng.range(-2, 2);
    FieldElem v = FieldElem::from_mpq(ctx, cq) * FieldElem::zeta(ctx, a) *
                  FieldElem::sqrt_q_pow(ctx, b);
    return squares ? v * v : v;
}

IrredSummand random_summand(ParamRng& rng, const FieldContext* ctx, BaseField base,
                            unsigned max_f, bool squares) {
    unsigned M = ctx->M();
    unsigned long qa = ctx->q() % M;
    if (base == BaseField::E) qa = (qa * (ctx->q() % M)) % M;
    std::vector<unsigned> candidates;
    for (unsigned e = 0; e < M; ++e)
        if (orbit_size(e, qa, M) <= max_f) candidates.push_back(e);
    if (candidates.empty()) throw validation_error("no orbit fits the dimension bound");
    unsigned e = candidates[rng.below(candidates.size())];
    return IrredSummand{e, 0, random_alpha(rng, ctx, squares)};
}

SemisimpleParam random_ss(ParamRng& rng, const FieldContext* ctx, BaseField base,
                          unsigned max_dim, bool squares) {
    long deg = base == BaseField::E ? 2 : 1;
    std::vector<IrredSummand> summands;
    unsigned budget = 1 + static_cast<unsigned>(rng.below(max_dim));
    while (budget > 0) {
        if (!summands.empty() && rng.below(3) == 0) {
            // extend an existing nu-chain to exercise monodromy
            IrredSummand prev = summands[rng.below(summands.size())];
            if (prev.f <= budget) {
                long shift = rng.range(-1, 1);
                prev.alpha =
                    prev.alpha * FieldElem::q_pow(ctx, deg * shift * static_cast<long>(prev.f));
                budget -= prev.f;
                summands.push_back(std::move(prev));
                continue;
            }
        }
        IrredSummand s = random_summand(rng, ctx, base, budget, squares);
        unsigned long qa = ctx->q() % ctx->M();
        if (base == BaseField::E) qa = (qa * (ctx->q() % ctx->M())) % ctx->M();
        s.f = orbit_size(s.zeta_exp, qa, ctx->M());
        summands.push_back(s);
        budget -= s.f;
    }
    return SemisimpleParam(ctx, base, std::move(summands));
}

SL2Param random_sl2(ParamRng& rng, const FieldContext* ctx, BaseField base,
                    unsigned max_dim) {
    std::vector<Segment> segments;
    unsigned budget = 1 + static_cast<unsigned>(rng.below(max_dim));
    while (budget > 0) {
        IrredSummand s = random_summand(rng, ctx, base, budget);
        unsigned long qa = ctx->q() % ctx->M();
        if (base == BaseField::E) qa = (qa * (ctx->q() % ctx->M())) % ctx->M();
        unsigned f = orbit_size(s.zeta_exp, qa, ctx->M());
        unsigned dmax = budget / f;
        unsigned d = 1 + static_cast<unsigned>(rng.below(dmax));
        segments.push_back(Segment{s, d});
        budget -= f * d;
    }
    return SL2Param(ctx, base, std::move(segments));
}

WDParam random_wd(ParamRng& rng, const FieldContext* ctx, BaseField base,
                  unsigned max_dim) {
    // segments biject with centralizer orbits, so a random SL2 parameter is
    // exactly a random (ss, N) pair
    return sl2_to_wd(random_sl2(rng, ctx, base, max_dim));
}

std::vector<unsigned> small_orbit_levels(unsigned q, BaseField base, unsigned max_f,
                                         unsigned cap) {
    std::vector<unsigned> out;
    unsigned p = 2;
    {
        unsigned rest = q;
        for (unsigned d = 2; d * d <= rest; ++d)
            if (rest % d == 0) {
                p = d;
                rest = 1;
                break;
            }
        if (rest != 1) p = rest;
    }
    for (unsigned M = 1; M <= cap; ++M) {
        if (M % p == 0) continue;
        unsigned long qa = q % M;
        if (base == BaseField::E) qa = (qa * (q % M)) % M;
        bool ok = true;
        for (unsigned e = 0; e < M; ++e)
            if (orbit_size(e, qa, M) > max_f) ok = false;
        if (ok) out.push_back(M);
    }
    return out;
}

}  // namespace wdparam
