#include "wdparam/integral.hpp"

namespace wdparam {

namespace {

void check_ell(const FieldContext* ctx, unsigned long ell) {
    if (ell < 3) throw validation_error("ell must be an odd prime");
    for (unsigned long d = 2; d * d <= ell; ++d)
        if (ell % d == 0) throw validation_error("ell must be prime");
    if (ctx->q() % ell == 0 || ctx->M() % ell == 0)
        throw validation_error("ell must not divide 2*M*q");
}

// v_ell of binomial(f, i) as a plain integer.
long binom_valuation(unsigned f, unsigned i, unsigned long ell) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), f, i);
    long v = 0;
    mpz_class L(static_cast<unsigned long>(ell));
    while (b != 0 && mpz_divisible_p(b.get_mpz_t(), L.get_mpz_t())) {
        b /= L;
        ++v;
    }
    return v;
}

}  // namespace

IntegralReport integral_predicates(const WDParam& w, unsigned long ell) {
    const SemisimpleParam& p = w.ss();
    const FieldContext* ctx = p.ctx();
    check_ell(ctx, ell);
    IntegralReport rep;

    // (ss) every eigenvalue an ell-unit
    rep.ss_integral = true;
    for (const auto& s : p.summands())
        if (ell_valuation(s.alpha, ell) != 0) rep.ss_integral = false;

    // (frob-ss) eigenvalues through the Jordan decomposition of Phi^f per block
    rep.frob_ss_integral = true;
    {
        Realization re = realize(p);
        auto offsets = block_offsets(p);
        for (size_t si = 0; si < p.summands().size(); ++si) {
            const auto& s = p.summands()[si];
            std::vector<size_t> idx(s.f);
            for (unsigned j = 0; j < s.f; ++j) idx[j] = offsets[si] + j;
            Matrix blk = re.phi.pow(s.f).select_rows(idx).select_columns(idx);
            Matrix sblk = re.sigma.select_rows(idx).select_columns(idx);
            FrobeniusSS jd = frobenius_ss(blk, sblk, {s.alpha});
            if (!(jd.unipotent == Matrix::identity(ctx, s.f)))
                throw compute_error("Frobenius power unexpectedly non-semisimple");
            for (unsigned j = 0; j < s.f; ++j)
                if (ell_valuation(jd.phi_ss.at(j, j), ell) != 0)
                    rep.frob_ss_integral = false;
        }
    }

    // (integral) inertia has finite order and exp(N) is compact, so the
    // closure of the image is compact iff the Frobenius-semisimple part is.
    rep.integral = rep.frob_ss_integral;

    // (git) characteristic polynomial coefficients of Phi^f per summand
    // block: (x - alpha)^f has coefficients binom(f,i) * (-alpha)^{f-i}
    rep.git_integral = true;
    for (const auto& s : p.summands()) {
        long va = ell_valuation(s.alpha, ell);
        bool coeffs_ok = true;
        for (unsigned i = 0; i < s.f; ++i) {
            long v = binom_valuation(s.f, i, ell) + static_cast<long>(s.f - i) * va;
            if (v < 0) coeffs_ok = false;
        }
        bool const_unit = (static_cast<long>(s.f) * va == 0);
        if (!coeffs_ok || !const_unit) rep.git_integral = false;
    }
    return rep;
}

long det_valuation(const SemisimpleParam& p, unsigned long ell) {
    check_ell(p.ctx(), ell);
    long v = 0;
    for (const auto& s : p.summands()) v += ell_valuation(s.alpha, ell);
    return v;
}

bool det_integral(const SemisimpleParam& p, unsigned long ell) {
    return det_valuation(p, ell) == 0;
}

}  // namespace wdparam
