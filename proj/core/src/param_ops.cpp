#include "wdparam/param_ops.hpp"

#include <map>
#include <numeric>

namespace wdparam {

SemisimpleParam dual(const SemisimpleParam& p) {
    std::vector<IrredSummand> out;
    unsigned M = p.ctx()->M();
    for (const auto& s : p.summands())
        out.push_back(IrredSummand{(M - s.zeta_exp % M) % M, s.f, s.alpha.inv()});
    return SemisimpleParam(p.ctx(), p.base(), std::move(out));
}

SemisimpleParam conj(const SemisimpleParam& p) {
    if (!p.over_E()) throw validation_error("conjugation needs a parameter over E");
    std::vector<IrredSummand> out;
    unsigned M = p.ctx()->M();
    for (const auto& s : p.summands())
        out.push_back(IrredSummand{static_cast<unsigned>((1ul * s.zeta_exp * p.ctx()->q()) % M),
                                   s.f, s.alpha});
    return SemisimpleParam(p.ctx(), p.base(), std::move(out));
}

SemisimpleParam conj_dual(const SemisimpleParam& p) { return dual(conj(p)); }

SemisimpleParam direct_sum(const SemisimpleParam& a, const SemisimpleParam& b) {
    if (a.ctx() != b.ctx() || a.base() != b.base())
        throw validation_error("direct sum of incompatible parameters");
    std::vector<IrredSummand> out = a.summands();
    out.insert(out.end(), b.summands().begin(), b.summands().end());
    return SemisimpleParam(a.ctx(), a.base(), std::move(out));
}

SemisimpleParam twist_unramified(const SemisimpleParam& p, const FieldElem& c) {
    std::vector<IrredSummand> out;
    for (const auto& s : p.summands())
        out.push_back(IrredSummand{s.zeta_exp, s.f, s.alpha * c.pow(s.f)});
    return SemisimpleParam(p.ctx(), p.base(), std::move(out));
}

SemisimpleParam twist_nu_halves(const SemisimpleParam& p, long half_steps) {
    // nu(Fr_geo) = q^{-deg}; a half step multiplies alpha by q^{-deg*f/2}.
    std::vector<IrredSummand> out;
    long deg = p.frobenius_degree();
    for (const auto& s : p.summands()) {
        FieldElem shift =
            FieldElem::sqrt_q_pow(p.ctx(), -deg * half_steps * static_cast<long>(s.f));
        out.push_back(IrredSummand{s.zeta_exp, s.f, s.alpha * shift});
    }
    return SemisimpleParam(p.ctx(), p.base(), std::move(out));
}

SemisimpleParam galois(const SemisimpleParam& p, long k) {
    unsigned M = p.ctx()->M();
    long kk = ((k % static_cast<long>(M)) + M) % M;
    if (std::gcd(static_cast<unsigned long>(kk), static_cast<unsigned long>(M)) != 1)
        throw validation_error("Galois exponent not coprime to M");
    std::vector<IrredSummand> out;
    for (const auto& s : p.summands())
        out.push_back(IrredSummand{static_cast<unsigned>((s.zeta_exp * kk) % M), s.f,
                                   s.alpha.galois(k)});
    return SemisimpleParam(p.ctx(), p.base(), std::move(out));
}

SemisimpleParam tensor(const SemisimpleParam& a, const SemisimpleParam& b) {
    return MonomialRep::tensor(MonomialRep::from_param(a), MonomialRep::from_param(b))
        .to_param();
}

std::pair<SemisimpleParam, SemisimpleParam> sym2_ext2(const SemisimpleParam& a) {
    MonomialRep r = MonomialRep::from_param(a);
    return {r.sym2().to_param(), r.wedge2().to_param()};
}

SemisimpleParam asai(const SemisimpleParam& rho, bool plus) {
    return MonomialRep::from_param(rho).asai(!plus).to_param();
}

FieldElem det_frobenius(const SemisimpleParam& p) {
    FieldElem d = FieldElem::one(p.ctx());
    for (const auto& s : p.summands()) {
        // det of the cyclic block: (-1)^{f-1} alpha
        FieldElem blk = s.alpha;
        if (s.f % 2 == 0) blk = -blk;
        d = d * blk;
    }
    return d;
}

SemisimpleParam decompose(const Matrix& phi, const Matrix& sigma, BaseField base,
                          const std::vector<FieldElem>& candidates) {
    const FieldContext* ctx = phi.ctx();
    size_t n = phi.rows();
    unsigned M = ctx->M();
    unsigned long qa = base == BaseField::E ? (1ul * ctx->q() * ctx->q()) % M
                                            : ctx->q() % M;
    // Inertia eigenspaces.
    std::map<unsigned, Matrix> eigenspaces;
    size_t total = 0;
    for (unsigned e = 0; e < M; ++e) {
        Matrix shifted = sigma;
        FieldElem z = FieldElem::zeta(ctx, e);
        for (size_t i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - z;
        Matrix k = shifted.kernel_basis();
        if (k.cols() > 0) {
            eigenspaces.emplace(e, std::move(k));
            total += eigenspaces.at(e).cols();
        }
    }
    if (total != n)
        throw compute_error("inertia action is not semisimple through mu_M");

    std::vector<IrredSummand> out;
    std::vector<bool> used(M, false);
    for (const auto& [e, basis] : eigenspaces) {
        if (used[e]) continue;
        auto orbit = frobenius_orbit(e, qa, M);
        unsigned f = static_cast<unsigned>(orbit.size());
        for (unsigned x : orbit) {
            used[x] = true;
            if (!eigenspaces.count(x))
                throw compute_error("inertia isotypic spaces unbalanced along orbit");
        }
        // Phi^f preserves the zeta^e eigenspace; express it there.
        Matrix pf = phi.pow(f);
        Matrix image = pf * basis;
        Matrix coords = basis.solve(image);  // basis * coords = image
        size_t k = coords.rows();
        size_t found = 0;
        for (const auto& cand : candidates) {
            Matrix shifted = coords;
            for (size_t i = 0; i < k; ++i) shifted.at(i, i) = shifted.at(i, i) - cand;
            size_t mult = shifted.kernel_basis().cols();
            if (mult == 0) continue;
            size_t mult2 = (shifted * shifted).kernel_basis().cols();
            if (mult2 != mult)
                throw compute_error("Frobenius power not semisimple on the zeta^" +
                                    std::to_string(e) + " block");
            for (size_t c = 0; c < mult; ++c)
                out.push_back(IrredSummand{e, f, cand});
            found += mult;
            if (found == k) break;
        }
        if (found != k)
            throw compute_error("missing candidate eigenvalue on the zeta^" +
                                std::to_string(e) + " block");
    }
    return SemisimpleParam(ctx, base, std::move(out));
}

FrobeniusSS frobenius_ss(const Matrix& phi, const Matrix& sigma,
                         const std::vector<FieldElem>& candidates) {
    const FieldContext* ctx = phi.ctx();
    size_t n = phi.rows();
    Poly cp = phi.charpoly();
    std::vector<std::pair<FieldElem, unsigned>> roots;
    Poly rem = cp;
    for (const auto& cand : candidates) {
        unsigned m = 0;
        while (rem.degree() >= 1 && rem.eval(cand).is_zero()) {
            rem = rem.deflate(cand);
            ++m;
        }
        if (m) roots.emplace_back(cand, m);
    }
    if (rem.degree() != 0)
        throw compute_error("characteristic polynomial does not split over the "
                            "candidate set; remaining factor " + rem.str());

    // Generalized eigenspace basis, column blocks per eigenvalue.
    Matrix basis(ctx, n, 0);
    std::vector<FieldElem> diag;
    std::vector<std::vector<FieldElem>> cols;
    for (const auto& [lambda, mult] : roots) {
        Matrix shifted = phi;
        for (size_t i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
        Matrix gen = shifted.pow(mult).kernel_basis();
        if (gen.cols() != mult)
            throw compute_error("generalized eigenspace dimension mismatch");
        for (size_t c = 0; c < gen.cols(); ++c) {
            std::vector<FieldElem> col(n, FieldElem::zero(ctx));
            for (size_t i = 0; i < n; ++i) col[i] = gen.at(i, c);
            cols.push_back(std::move(col));
            diag.push_back(lambda);
        }
    }
    Matrix B(ctx, n, cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t i = 0; i < n; ++i) B.at(i, c) = cols[c][i];
    if (B.cols() != n) throw compute_error("eigenspaces do not fill the space");
    Matrix D(ctx, n, n);
    for (size_t i = 0; i < n; ++i) D.at(i, i) = diag[i];
    Matrix Binv = B.inverse();
    Matrix phi_ss = B * D * Binv;
    Matrix u = phi_ss.inverse() * phi;

    Matrix nilp = u - Matrix::identity(ctx, n);
    if (!nilp.pow(n).is_zero()) throw compute_error("Jordan factor is not unipotent");
    if (!(phi_ss * u == u * phi_ss))
        throw compute_error("Jordan factors do not commute");
    if (!(sigma * u == u * sigma))
        throw compute_error("unipotent part does not commute with inertia");
    return FrobeniusSS{std::move(phi_ss), sigma, std::move(u)};
}

}  // namespace wdparam
