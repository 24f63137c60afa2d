#include "wdparam/converse.hpp"

#include <algorithm>

namespace wdparam {

std::vector<TwistFamily> enumerate_irreducibles(unsigned n, const FieldContext* ctx,
                                                BaseField base) {
    unsigned M = ctx->M();
    unsigned long qa = ctx->q() % M;
    if (base == BaseField::E) qa = (qa * (ctx->q() % M)) % M;
    std::vector<TwistFamily> out;
    std::vector<bool> seen(M, false);
    for (unsigned e = 0; e < M; ++e) {
        if (seen[e]) continue;
        auto orbit = frobenius_orbit(e, qa, M);
        for (unsigned x : orbit) seen[x] = true;
        if (orbit.size() <= n)
            out.push_back(TwistFamily{orbit_min(e, qa, M),
                                      static_cast<unsigned>(orbit.size())});
    }
    std::sort(out.begin(), out.end(), [](const TwistFamily& a, const TwistFamily& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.orbit < b.orbit;
    });
    return out;
}

namespace {

struct Chain {
    std::vector<FieldElem> points;  // u-coordinates, one nu-step apart, top first
    std::vector<int> values;        // divisor multiplicities at those points
};

// Group divisor support points into nu-chains (ratio an integer power of
// q^{deg*f}); positions inside a chain are contiguous with zero fill.
std::vector<Chain> chain_decomposition(const Divisor& d, const FieldContext* ctx,
                                       long deg, unsigned f) {
    FieldElem step = FieldElem::q_pow(ctx, deg * static_cast<long>(f));
    std::vector<std::pair<FieldElem, int>> pts(d.support().begin(), d.support().end());
    std::vector<bool> used(pts.size(), false);
    std::vector<Chain> chains;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::pair<long, size_t>> members{{0, i}};
        used[i] = true;
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (used[j]) continue;
            auto pw = (pts[j].first / pts[i].first).as_q_power();
            if (!pw || *pw % (deg * static_cast<long>(f)) != 0) continue;
            members.emplace_back(*pw / (deg * static_cast<long>(f)), j);
            used[j] = true;
        }
        long top = members[0].first, bottom = members[0].first;
        for (const auto& [k, idx] : members) {
            top = std::max(top, k);
            bottom = std::min(bottom, k);
        }
        Chain c;
        size_t len = static_cast<size_t>(top - bottom + 1);
        c.values.assign(len, 0);
        FieldElem cur = pts[i].first * step.pow(top);
        for (size_t t = 0; t < len; ++t) {
            c.points.push_back(cur);
            cur = cur / step;
        }
        for (const auto& [k, idx] : members)
            c.values[static_cast<size_t>(top - k)] = pts[idx].second;
        chains.push_back(std::move(c));
    }
    return chains;
}

}  // namespace

SemisimpleParam reconstruct(const GammaOracle& oracle, unsigned n,
                            const FieldContext* ctx, BaseField base) {
    long deg = base == BaseField::E ? 2 : 1;
    std::vector<IrredSummand> recovered;
    for (const auto& fam : enumerate_irreducibles(n, ctx, base)) {
        SemisimpleParam tau = fam.representative(ctx, base);
        GammaDivisor d = oracle(tau);
        const GammaFamily* gf = d.family(fam.orbit);
        if (gf == nullptr) continue;  // no twist of this family occurs
        if (gf->f != fam.f)
            throw compute_error("oracle family dimension mismatch");
        for (const auto& chain : chain_decomposition(gf->div, ctx, deg, fam.f)) {
            size_t L = chain.values.size();
            // d_k = -m_{k+1} + 2 m_k - m_{k-1}: with g_t = m_t - m_{t+1},
            // g is the prefix sum of d and m the suffix sum of g.
            std::vector<long> g(L, 0);
            long acc = 0;
            for (size_t t = 0; t < L; ++t) {
                acc += chain.values[t];
                g[t] = acc;
            }
            if (acc != 0)
                throw compute_error("inconsistent pair divisor on the chain through u = " +
                                    chain.points[0].str());
            std::vector<long> m(L, 0);
            long suffix = 0;
            for (size_t t = L; t-- > 0;) {
                suffix += g[t];
                m[t] = suffix;
            }
            // boundary summands would have leaked divisor mass outside the
            // support window, so the window edges must be empty
            if ((L > 0 && m[0] != 0) || (L > 1 && m[L - 1] != 0))
                throw compute_error("chain solution not finitely supported at u = " +
                                    chain.points[0].str());
            for (size_t t = 0; t < L; ++t) {
                if (m[t] < 0)
                    throw compute_error("negative multiplicity on the chain through u = " +
                                        chain.points[0].str());
                // class u = alpha_tau / beta with alpha_tau = 1
                FieldElem beta = chain.points[t].inv();
                for (long c = 0; c < m[t]; ++c)
                    recovered.push_back(IrredSummand{fam.orbit, fam.f, beta});
            }
        }
    }
    SemisimpleParam out(ctx, base, std::move(recovered));
    if (out.dimension() > n)
        throw compute_error("reconstructed dimension exceeds the bound");
    return out;
}

}  // namespace wdparam
