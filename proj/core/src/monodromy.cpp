#include "wdparam/monodromy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace wdparam {

Matrix left_mult_operator(const Matrix& A) {
    const FieldContext* ctx = A.ctx();
    size_t n = A.rows();
    Matrix op(ctx, n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < n; ++j) op.at(i * n + j, k * n + j) = A.at(i, k);
        }
    return op;
}

Matrix right_mult_operator(const Matrix& A) {
    const FieldContext* ctx = A.ctx();
    size_t n = A.rows();
    Matrix op(ctx, n * n, n * n);
    for (size_t l = 0; l < n; ++l)
        for (size_t j = 0; j < n; ++j) {
            if (A.at(l, j).is_zero()) continue;
            for (size_t i = 0; i < n; ++i) op.at(i * n + j, i * n + l) = A.at(l, j);
        }
    return op;
}

Matrix ad_operator(const Matrix& N) {
    return left_mult_operator(N) - right_mult_operator(N);
}

namespace {

// {X : Phi X Phi^{-1} = scale * X, Sigma X = X Sigma} as kernel columns.
Matrix conjugation_eigenspace(const SemisimpleParam& r, const FieldElem& scale) {
    Realization re = realize(r);
    // Phi X - scale * X Phi = 0 and Sigma X - X Sigma = 0
    Matrix c1 = left_mult_operator(re.phi) - right_mult_operator(re.phi) * scale;
    Matrix c2 = left_mult_operator(re.sigma) - right_mult_operator(re.sigma);
    return Matrix::vstack(c1, c2).kernel_basis();
}

}  // namespace

Matrix monodromy_space(const SemisimpleParam& r) {
    return conjugation_eigenspace(r, FieldElem::q_pow(r.ctx(), -r.frobenius_degree()));
}

Matrix twisted_fixed_space(const SemisimpleParam& r) {
    return conjugation_eigenspace(r, FieldElem::q_pow(r.ctx(), r.frobenius_degree()));
}

bool rank_lex_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        unsigned x = i < a.size() ? a[i] : 0;
        unsigned y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

namespace {

// Segment layouts on one chain: multisets of intervals [s, t] covering the
// multiplicity vector exactly.
using Layout = std::vector<std::pair<unsigned, unsigned>>;  // (start, length)

void enumerate_layouts(const std::vector<unsigned>& mult, size_t pos,
                       std::map<unsigned, unsigned>& open, Layout& acc,
                       std::vector<Layout>& out) {
    if (pos == mult.size()) {
        Layout full = acc;
        for (const auto& [start, cnt] : open)
            for (unsigned c = 0; c < cnt; ++c)
                full.emplace_back(start, static_cast<unsigned>(mult.size()) - start);
        std::sort(full.begin(), full.end());
        out.push_back(std::move(full));
        return;
    }
    unsigned m = mult[pos];
    // choose how many open segments continue into pos, per start position
    std::vector<unsigned> starts;
    for (const auto& [s, c] : open) starts.push_back(s);
    // iterate all continue-count vectors 0 <= c_s <= open[s], sum <= m
    std::function<void(size_t, unsigned, std::map<unsigned, unsigned>&)> rec =
        [&](size_t si, unsigned used, std::map<unsigned, unsigned>& cont) {
            if (si == starts.size()) {
                // close everything not continued
                Layout closed = acc;
                for (const auto& [s, c] : open) {
                    unsigned keep = cont.count(s) ? cont.at(s) : 0;
                    for (unsigned k = keep; k < c; ++k)
                        closed.emplace_back(s, static_cast<unsigned>(pos) - s);
                }
                std::map<unsigned, unsigned> next = cont;
                if (m - used > 0) next[static_cast<unsigned>(pos)] = m - used;
                Layout saved_acc;
                saved_acc.swap(acc);
                acc = closed;
                enumerate_layouts(mult, pos + 1, next, acc, out);
                acc.swap(saved_acc);
                return;
            }
            unsigned s = starts[si];
            unsigned avail = open.at(s);
            for (unsigned c = 0; c <= std::min(avail, m - used); ++c) {
                if (c) cont[s] = c;
                rec(si + 1, used + c, cont);
                cont.erase(s);
            }
        };
    std::map<unsigned, unsigned> cont;
    rec(0, 0, cont);
}

std::vector<Layout> chain_layouts(const std::vector<unsigned>& mult) {
    std::vector<Layout> out;
    std::map<unsigned, unsigned> open;
    Layout acc;
    enumerate_layouts(mult, 0, open, acc, out);
    // dedupe
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<OrbitDescriptor> enumerate_orbits(const SemisimpleParam& r, unsigned bound) {
    if (r.dimension() > bound)
        throw validation_error("orbit enumeration bound exceeded");
    const FieldContext* ctx = r.ctx();
    long deg = r.frobenius_degree();
    auto chains = nu_chains(r);

    // per-chain layout lists
    std::vector<std::vector<Layout>> per_chain;
    for (const auto& chain : chains) {
        std::vector<unsigned> mult(chain.length());
        for (size_t t = 0; t < chain.length(); ++t) mult[t] = chain.multiplicity(t);
        per_chain.push_back(chain_layouts(mult));
    }

    std::vector<OrbitDescriptor> out;
    std::vector<size_t> pick(per_chain.size(), 0);
    while (true) {
        std::vector<Segment> segments;
        for (size_t c = 0; c < per_chain.size(); ++c) {
            const auto& chain = chains[c];
            for (const auto& [start, len] : per_chain[c][pick[c]]) {
                FieldElem sigma_alpha =
                    chain.alphas[start] *
                    FieldElem::sqrt_q_pow(ctx, -deg * static_cast<long>(chain.f) *
                                                   (static_cast<long>(len) - 1));
                segments.push_back(
                    Segment{IrredSummand{chain.orbit, chain.f, sigma_alpha}, len});
            }
        }
        SL2Param sl2(ctx, r.base(), segments);
        WDParam w = sl2_to_wd(sl2);
        std::vector<unsigned> ranks;
        for (unsigned j = 1;; ++j) {
            unsigned rk = 0;
            for (const auto& seg : sl2.segments())
                if (seg.d > j) rk += seg.sigma.f * (seg.d - j);
            if (rk == 0) break;
            ranks.push_back(rk);
        }
        out.push_back(OrbitDescriptor{std::move(sl2), std::move(ranks), w.monodromy()});

        // advance the product iterator
        size_t c = 0;
        while (c < pick.size() && ++pick[c] == per_chain[c].size()) {
            pick[c] = 0;
            ++c;
        }
        if (c == pick.size()) break;
        if (pick.empty()) break;
    }
    if (per_chain.empty()) {
        // zero-dimensional parameter: single empty orbit
        out.clear();
        out.push_back(OrbitDescriptor{SL2Param(ctx, r.base(), {}), {},
                                      Matrix(ctx, 0, 0)});
    }
    return out;
}

bool is_open(const SemisimpleParam& r, const Matrix& N) {
    WDParam check(r, N);  // validates the pair
    Matrix e = twisted_fixed_space(r);
    if (e.cols() == 0) return true;  // vacuously open (V_r = 0 dual side)
    Matrix ad = ad_operator(N);
    return (ad * e).rank() == e.cols();
}

unsigned pole_order_at_1(const WDParam& w) {
    const SemisimpleParam& r = w.ss();
    Realization re = realize(r);
    FieldElem scale = FieldElem::q_pow(r.ctx(), r.frobenius_degree());
    Matrix c1 = left_mult_operator(re.phi) - right_mult_operator(re.phi) * scale;
    Matrix c2 = left_mult_operator(re.sigma) - right_mult_operator(re.sigma);
    Matrix c3 = ad_operator(w.monodromy());
    return static_cast<unsigned>(
        Matrix::vstack(Matrix::vstack(c1, c2), c3).kernel_basis().cols());
}

unsigned pole_order_at_1(const SL2Param& p) { return pole_order_at_1(sl2_to_wd(p)); }

unsigned pole_order_at_1_via_lfactor(const WDParam& w) {
    const SemisimpleParam& r = w.ss();
    MonomialRep std_rep = MonomialRep::from_param(r);
    MonomialRep ad_rep = MonomialRep::tensor(std_rep, std_rep.dual());
    Poly den = l_denominator(ad_rep, ad_operator(w.monodromy()));
    return den.root_multiplicity(FieldElem::q_pow(r.ctx(), -r.frobenius_degree()));
}

bool l_holomorphic_at_1(const WDParam& w) { return pole_order_at_1(w) == 0; }
bool l_holomorphic_at_1(const SL2Param& p) { return pole_order_at_1(p) == 0; }

OrbitDescriptor check_gpr_uniqueness(const SemisimpleParam& r, unsigned bound) {
    auto orbits = enumerate_orbits(r, bound);
    std::vector<size_t> open_idx, holo_idx;
    size_t max_idx = 0;
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (r.dimension() > 0 && is_open(r, orbits[i].representative)) open_idx.push_back(i);
        if (r.dimension() > 0 &&
            pole_order_at_1(WDParam(r, orbits[i].representative)) == 0)
            holo_idx.push_back(i);
        if (rank_lex_less(orbits[max_idx].rank_sequence, orbits[i].rank_sequence))
            max_idx = i;
    }
    if (r.dimension() == 0) return orbits[0];
    std::ostringstream diag;
    if (open_idx.size() != 1 || holo_idx.size() != 1 || open_idx[0] != holo_idx[0] ||
        open_idx[0] != max_idx) {
        diag << "maximal-monodromy equivalence failed for r = " << r.str()
             << ": open orbits {";
        for (size_t i : open_idx) diag << i << " ";
        diag << "}, holomorphic {";
        for (size_t i : holo_idx) diag << i << " ";
        diag << "}, rank-lex max " << max_idx << " of " << orbits.size();
        throw compute_error(diag.str());
    }
    return orbits[open_idx[0]];
}

}  // namespace wdparam
