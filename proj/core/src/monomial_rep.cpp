#include "wdparam/monomial_rep.hpp"

#include <algorithm>

namespace wdparam {

MonomialRep MonomialRep::from_param(const SemisimpleParam& p) {
    MonomialRep r(p.ctx(), p.base());
    unsigned long qa = p.q_act();
    unsigned M = p.ctx()->M();
    for (const auto& s : p.summands()) {
        size_t base = r.dim();
        unsigned long e = s.zeta_exp;
        for (unsigned i = 0; i < s.f; ++i) {
            r.add_basis(static_cast<unsigned>(e));
            e = (e * qa) % M;
        }
        for (unsigned i = 0; i + 1 < s.f; ++i)
            r.set_arrow(base + i, base + i + 1, FieldElem::one(p.ctx()));
        r.set_arrow(base + s.f - 1, base, s.alpha);
    }
    return r;
}

size_t MonomialRep::add_basis(unsigned exponent) {
    exponent_.push_back(exponent % ctx_->M());
    phi_.push_back(Arrow{exponent_.size() - 1, FieldElem::zero(ctx_)});
    return exponent_.size() - 1;
}

void MonomialRep::set_arrow(size_t from, size_t to, FieldElem scale) {
    phi_[from] = Arrow{to, std::move(scale)};
}

void MonomialRep::validate() const {
    unsigned M = ctx_->M();
    unsigned long qa =
        base_ == BaseField::E ? (1ul * ctx_->q() * ctx_->q()) % M : ctx_->q() % M;
    std::vector<unsigned> indeg(dim(), 0);
    for (size_t i = 0; i < dim(); ++i) {
        if (phi_[i].scale.is_zero()) throw compute_error("missing Frobenius arrow");
        indeg[phi_[i].to]++;
        if (exponent_[phi_[i].to] != (exponent_[i] * qa) % M)
            throw compute_error("arrow violates the tame relation");
    }
    for (unsigned d : indeg)
        if (d != 1) throw compute_error("Frobenius action is not a permutation");
}

MonomialRep MonomialRep::dual() const {
    MonomialRep r(ctx_, base_);
    unsigned M = ctx_->M();
    for (size_t i = 0; i < dim(); ++i) r.add_basis((M - exponent_[i] % M) % M);
    for (size_t i = 0; i < dim(); ++i)
        r.set_arrow(i, phi_[i].to, phi_[i].scale.inv());
    return r;
}

MonomialRep MonomialRep::tensor(const MonomialRep& a, const MonomialRep& b) {
    if (a.ctx() != b.ctx() || a.base() != b.base())
        throw validation_error("tensor of representations over different groups");
    MonomialRep r(a.ctx(), a.base());
    size_t nb = b.dim();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < nb; ++j) r.add_basis(a.exponent_[i] + b.exponent_[j]);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < nb; ++j)
            r.set_arrow(i * nb + j, a.phi_[i].to * nb + b.phi_[j].to,
                        a.phi_[i].scale * b.phi_[j].scale);
    return r;
}

MonomialRep MonomialRep::sym2() const {
    MonomialRep r(ctx_, base_);
    size_t n = dim();
    std::vector<std::vector<size_t>> idx(n, std::vector<size_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            idx[i][j] = r.add_basis(exponent_[i] + exponent_[j]);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            size_t ti = phi_[i].to, tj = phi_[j].to;
            FieldElem s = phi_[i].scale * phi_[j].scale;
            if (ti > tj) std::swap(ti, tj);
            r.set_arrow(idx[i][j], idx[ti][tj], s);
        }
    }
    return r;
}

MonomialRep MonomialRep::wedge2() const {
    MonomialRep r(ctx_, base_);
    size_t n = dim();
    std::vector<std::vector<size_t>> idx(n, std::vector<size_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            idx[i][j] = r.add_basis(exponent_[i] + exponent_[j]);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            size_t ti = phi_[i].to, tj = phi_[j].to;
            FieldElem s = phi_[i].scale * phi_[j].scale;
            if (ti == tj) throw compute_error("wedge image collision");
            if (ti > tj) {
                std::swap(ti, tj);
                s = -s;
            }
            r.set_arrow(idx[i][j], idx[ti][tj], s);
        }
    }
    return r;
}

MonomialRep MonomialRep::asai(bool minus_sign) const {
    if (base_ != BaseField::E)
        throw validation_error("tensor induction needs a representation over E");
    MonomialRep r(ctx_, BaseField::F);
    size_t n = dim();
    unsigned q = ctx_->q();
    // label (i,j) = v_i (x) w_j; inertia acts by rho(s) (x) rho(s^q),
    // Frobenius of F by (v (x) w) -> rho(Fr_E) w (x) v.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            r.add_basis(exponent_[i] + q * exponent_[j]);
    FieldElem sgn = minus_sign ? -FieldElem::one(ctx_) : FieldElem::one(ctx_);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            r.set_arrow(i * n + j, phi_[j].to * n + i, phi_[j].scale * sgn);
    return r;
}

MonomialRep MonomialRep::restrict_to_E() const {
    if (base_ != BaseField::F)
        throw validation_error("restriction expects a representation over F");
    MonomialRep r(ctx_, BaseField::E);
    for (size_t i = 0; i < dim(); ++i) r.add_basis(exponent_[i]);
    for (size_t i = 0; i < dim(); ++i) {
        const Arrow& first = phi_[i];
        const Arrow& second = phi_[first.to];
        r.set_arrow(i, second.to, first.scale * second.scale);
    }
    return r;
}

MonomialRep MonomialRep::scale_frobenius(const FieldElem& c) const {
    MonomialRep r = *this;
    for (auto& a : r.phi_) a.scale = a.scale * c;
    return r;
}

MonomialRep MonomialRep::galois(long k) const {
    MonomialRep r = *this;
    for (auto& a : r.phi_) a.scale = a.scale.galois(k);
    return r;
}

std::vector<MonomialRep::Cycle> MonomialRep::cycles() const {
    validate();
    std::vector<bool> seen(dim(), false);
    std::vector<Cycle> out;
    for (size_t i = 0; i < dim(); ++i) {
        if (seen[i]) continue;
        Cycle c{exponent_[i], 0, FieldElem::one(ctx_)};
        size_t cur = i;
        do {
            seen[cur] = true;
            c.wrap = c.wrap * phi_[cur].scale;
            cur = phi_[cur].to;
            ++c.length;
        } while (cur != i);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<MonomialRep::Cycle> MonomialRep::invariant_cycles() const {
    std::vector<Cycle> out;
    for (const auto& c : cycles())
        if (c.exponent % ctx_->M() == 0) out.push_back(c);
    return out;
}

SemisimpleParam MonomialRep::to_param() const {
    unsigned long qa =
        base_ == BaseField::E ? (1ul * ctx_->q() * ctx_->q()) % ctx_->M() : ctx_->q() % ctx_->M();
    std::vector<IrredSummand> summands;
    for (const auto& c : cycles()) {
        auto part = decompose_cycle(ctx_, qa, c);
        summands.insert(summands.end(), part.begin(), part.end());
    }
    return SemisimpleParam(ctx_, base_, std::move(summands));
}

Matrix MonomialRep::phi_matrix() const {
    Matrix m(ctx_, dim(), dim());
    for (size_t i = 0; i < dim(); ++i) m.at(phi_[i].to, i) = phi_[i].scale;
    return m;
}

Matrix MonomialRep::sigma_matrix() const {
    Matrix m(ctx_, dim(), dim());
    for (size_t i = 0; i < dim(); ++i)
        m.at(i, i) = FieldElem::zeta(ctx_, exponent_[i]);
    return m;
}

std::vector<FieldElem> monomial_roots(unsigned d, const FieldElem& a) {
    const FieldContext* ctx = a.ctx();
    std::vector<FieldElem> roots;
    if (d == 0) throw validation_error("monomial_roots needs d >= 1");
    if (d == 1) return {a};
    auto mono = a.as_monomial();
    if (!mono) return {};
    unsigned M = ctx->M();
    unsigned bmax = ctx->sqrt_q_is_integer() ? 0u : 1u;

    auto rational_dth_roots = [&](const mpq_class& target) {
        std::vector<mpq_class> out;
        if (target == 0) return out;
        mpz_class num = target.get_num(), den = target.get_den();
        bool neg = num < 0;
        if (neg && d % 2 == 0) return out;
        mpz_class anum = abs(num);
        mpz_class rn, rd;
        if (mpz_root(rn.get_mpz_t(), anum.get_mpz_t(), d) == 0) return out;
        if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d) == 0) return out;
        mpq_class r(rn, rd);
        r.canonicalize();
        if (neg) r = -r;
        out.push_back(r);
        if (d % 2 == 0) out.push_back(-r);
        return out;
    };

    // try every root-of-unity/sqrt(q) part directly: delta = c' zeta^a' rq^b'
    // solves delta^d = A iff A / (zeta^{a'd} rq^{b'd}) is rational with a
    // rational d-th root; this absorbs sign flips hidden in roots of unity
    // (e.g. -1 = zeta^{M/2}).
    for (unsigned b = 0; b <= bmax; ++b) {
        for (unsigned ap = 0; ap < M; ++ap) {
            FieldElem shift = FieldElem::zeta(ctx, -static_cast<long>(ap) *
                                                       static_cast<long>(d)) *
                              FieldElem::sqrt_q_pow(ctx, -static_cast<long>(b) *
                                                             static_cast<long>(d));
            auto t = (a * shift).as_rational();
            if (!t) continue;
            for (const auto& c : rational_dth_roots(*t)) {
                FieldElem root = FieldElem::from_monomial(ctx, Monomial{c, ap, b});
                if (std::find(roots.begin(), roots.end(), root) == roots.end())
                    roots.push_back(root);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<IrredSummand> decompose_cycle(const FieldContext* ctx, unsigned long q_act,
                                          const MonomialRep::Cycle& c) {
    unsigned g = orbit_size(c.exponent, q_act, ctx->M());
    if (c.length % g != 0)
        throw compute_error("cycle length incompatible with inertia orbit");
    unsigned d = c.length / g;
    if (d == 1) return {IrredSummand{c.exponent, g, c.wrap}};
    auto roots = monomial_roots(d, c.wrap);
    if (roots.size() != d) {
        throw compute_error(
            "cyclic block does not split over K: needs the " + std::to_string(d) +
            "-th roots of " + c.wrap.str() + " on the orbit of zeta^" +
            std::to_string(c.exponent));
    }
    std::vector<IrredSummand> out;
    out.reserve(d);
    for (const auto& r : roots) out.push_back(IrredSummand{c.exponent, g, r});
    return out;
}

}  // namespace wdparam
