#include "wdparam/dictionary.hpp"

#include <algorithm>
#include <map>

namespace wdparam {

namespace {

// alpha * q^{deg*f*k} for integer k (k may be negative).
FieldElem q_lattice_shift(const FieldElem& alpha, long deg, unsigned f, long k) {
    return alpha * FieldElem::q_pow(alpha.ctx(), deg * static_cast<long>(f) * k);
}

}  // namespace

std::vector<NuChain> nu_chains(const SemisimpleParam& p) {
    long deg = p.frobenius_degree();
    std::vector<NuChain> chains;
    std::vector<bool> assigned(p.summands().size(), false);

    for (size_t i = 0; i < p.summands().size(); ++i) {
        if (assigned[i]) continue;
        const auto& si = p.summands()[i];
        long step = deg * static_cast<long>(si.f);
        // collect all instances on the lattice alpha_i * q^{step * Z}
        std::vector<std::pair<long, size_t>> members;  // (lattice index, summand)
        for (size_t j = i; j < p.summands().size(); ++j) {
            if (assigned[j]) continue;
            const auto& sj = p.summands()[j];
            if (sj.zeta_exp != si.zeta_exp || sj.f != si.f) continue;
            auto pw = (sj.alpha / si.alpha).as_q_power();
            if (!pw || *pw % step != 0) continue;
            members.emplace_back(*pw / step, j);
            assigned[j] = true;
        }
        long top = members[0].first, bottom = members[0].first;
        for (const auto& [k, idx] : members) {
            top = std::max(top, k);
            bottom = std::min(bottom, k);
        }
        NuChain chain;
        chain.orbit = si.zeta_exp;
        chain.f = si.f;
        size_t len = static_cast<size_t>(top - bottom + 1);
        chain.alphas.reserve(len);
        chain.instances.assign(len, {});
        for (size_t t = 0; t < len; ++t)
            chain.alphas.push_back(
                q_lattice_shift(si.alpha, deg, si.f, top - static_cast<long>(t)));
        // position t corresponds to lattice index top - t (nu lowers by one step)
        for (const auto& [k, idx] : members)
            chain.instances[static_cast<size_t>(top - k)].push_back(idx);
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::vector<size_t> block_offsets(const SemisimpleParam& p) {
    std::vector<size_t> off;
    off.reserve(p.summands().size());
    size_t cur = 0;
    for (const auto& s : p.summands()) {
        off.push_back(cur);
        cur += s.f;
    }
    return off;
}

WDParam sl2_to_wd(const SL2Param& p) {
    const FieldContext* ctx = p.ctx();
    long deg = p.base() == BaseField::E ? 2 : 1;

    // Expand segments into summand instances, remembering provenance.
    struct Inst {
        IrredSummand s;
        size_t segment;
        unsigned level;  // i in 0..d-1, 0 = top of the segment
    };
    std::vector<Inst> insts;
    for (size_t gi = 0; gi < p.segments().size(); ++gi) {
        const auto& seg = p.segments()[gi];
        for (unsigned i = 0; i < seg.d; ++i) {
            // alpha_i = alpha * sqrt(q)^{deg*f*(d-1-2i)}
            FieldElem a = seg.sigma.alpha *
                          FieldElem::sqrt_q_pow(ctx, deg * static_cast<long>(seg.sigma.f) *
                                                         (static_cast<long>(seg.d) - 1 -
                                                          2 * static_cast<long>(i)));
            insts.push_back(Inst{IrredSummand{seg.sigma.zeta_exp, seg.sigma.f, a}, gi, i});
        }
    }
    std::vector<IrredSummand> summands;
    summands.reserve(insts.size());
    for (const auto& in : insts) summands.push_back(in.s);
    SemisimpleParam ss(ctx, p.base(), summands);

    // Map each instance to its block in the canonical realization: stable
    // assignment of equal summands in construction order.
    std::vector<size_t> order(insts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return insts[a].s < insts[b].s; });
    auto offsets = block_offsets(ss);
    std::vector<size_t> block_of(insts.size());
    for (size_t rank = 0; rank < order.size(); ++rank) block_of[order[rank]] = offsets[rank];

    // N: level i -> level i+1 within each segment, with coordinates scaled by
    // q^{deg*j} so that Phi N Phi^{-1} = q^{-deg} N holds.
    unsigned n = ss.dimension();
    Matrix N(ctx, n, n);
    std::map<std::pair<size_t, unsigned>, size_t> inst_by_slot;
    for (size_t ii = 0; ii < insts.size(); ++ii)
        inst_by_slot[{insts[ii].segment, insts[ii].level}] = ii;
    for (size_t ii = 0; ii < insts.size(); ++ii) {
        const auto& in = insts[ii];
        auto next = inst_by_slot.find({in.segment, in.level + 1});
        if (next == inst_by_slot.end()) continue;
        size_t src = block_of[ii], dst = block_of[next->second];
        for (unsigned j = 0; j < in.s.f; ++j)
            N.at(dst + j, src + j) = FieldElem::q_pow(ctx, deg * static_cast<long>(j));
    }
    return WDParam(std::move(ss), std::move(N));
}

SL2Param wd_to_sl2(const WDParam& w) {
    const SemisimpleParam& ss = w.ss();
    const FieldContext* ctx = ss.ctx();
    const Matrix& N = w.monodromy();
    long deg = ss.frobenius_degree();
    auto chains = nu_chains(ss);
    auto offsets = block_offsets(ss);

    std::vector<Segment> segments;
    for (const auto& chain : chains) {
        size_t L = chain.length();
        std::vector<std::vector<size_t>> coords(L);
        for (size_t t = 0; t < L; ++t)
            for (size_t inst : chain.instances[t])
                for (unsigned j = 0; j < chain.f; ++j)
                    coords[t].push_back(offsets[inst] + j);

        std::vector<Matrix> powers;
        powers.push_back(Matrix::identity(ctx, ss.dimension()));
        for (size_t j = 1; j <= L + 1; ++j) powers.push_back(powers.back() * N);

        // rank of the component of N^j from position a to a+j, in units of f
        auto rank_units = [&](long a, long j) -> long {
            if (a < 0 || j < 0) return 0;
            if (static_cast<size_t>(a) >= L || static_cast<size_t>(a + j) >= L) return 0;
            if (coords[a].empty() || coords[a + j].empty()) return 0;
            if (j == 0) return static_cast<long>(coords[a].size() / chain.f);
            Matrix sub = powers[static_cast<size_t>(j)]
                             .select_rows(coords[static_cast<size_t>(a + j)])
                             .select_columns(coords[static_cast<size_t>(a)]);
            size_t rk = sub.rank();
            if (rk % chain.f != 0)
                throw compute_error("monodromy rank incompatible with the chain blocks");
            return static_cast<long>(rk / chain.f);
        };

        long total = 0;
        for (size_t a = 0; a < L; ++a) {
            for (size_t d = 1; d + a <= L; ++d) {
                long s = rank_units(static_cast<long>(a), static_cast<long>(d) - 1) -
                         rank_units(static_cast<long>(a), static_cast<long>(d)) -
                         rank_units(static_cast<long>(a) - 1, static_cast<long>(d)) +
                         rank_units(static_cast<long>(a) - 1, static_cast<long>(d) + 1);
                if (s < 0) throw compute_error("chain matching failed: negative segment count");
                if (s == 0) continue;
                FieldElem sigma_alpha =
                    chain.alphas[a] *
                    FieldElem::sqrt_q_pow(ctx, -deg * static_cast<long>(chain.f) *
                                                   (static_cast<long>(d) - 1));
                for (long c = 0; c < s; ++c)
                    segments.push_back(Segment{IrredSummand{chain.orbit, chain.f, sigma_alpha},
                                               static_cast<unsigned>(d)});
                total += s * static_cast<long>(d);
            }
        }
        long expect = 0;
        for (size_t t = 0; t < L; ++t) expect += chain.multiplicity(t);
        if (total != expect)
            throw compute_error("chain matching failed: segment count mismatch");
    }
    return SL2Param(ctx, ss.base(), std::move(segments));
}

SemisimpleParam semisimplify(const SL2Param& p) {
    const FieldContext* ctx = p.ctx();
    long deg = p.base() == BaseField::E ? 2 : 1;
    std::vector<IrredSummand> out;
    for (const auto& seg : p.segments()) {
        for (unsigned i = 0; i < seg.d; ++i) {
            FieldElem a = seg.sigma.alpha *
                          FieldElem::sqrt_q_pow(ctx, deg * static_cast<long>(seg.sigma.f) *
                                                         (static_cast<long>(seg.d) - 1 -
                                                          2 * static_cast<long>(i)));
            out.push_back(IrredSummand{seg.sigma.zeta_exp, seg.sigma.f, a});
        }
    }
    return SemisimpleParam(ctx, p.base(), std::move(out));
}

SemisimpleParam semisimplify(const WDParam& w) { return w.ss(); }

bool wd_isomorphic(const WDParam& a, const WDParam& b) {
    if (!is_isomorphic(a.ss(), b.ss())) return false;
    return wd_to_sl2(a) == wd_to_sl2(b);
}

}  // namespace wdparam
