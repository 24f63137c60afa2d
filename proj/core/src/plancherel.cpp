#include "wdparam/plancherel.hpp"

#include "wdparam/param_ops.hpp"

namespace wdparam {

BinomialProduct mu_gl_pair_factors(const SemisimpleParam& tau,
                                   const SemisimpleParam& tau2) {
    if (tau.ctx() != tau2.ctx() || tau.base() != tau2.base())
        throw validation_error("pair measure of incompatible parameters");
    MonomialRep t1 = MonomialRep::from_param(tau);
    MonomialRep t2 = MonomialRep::from_param(tau2);
    BinomialProduct g1 = gamma_factors(MonomialRep::tensor(t1, t2.dual()));
    BinomialProduct g2 = gamma_factors(MonomialRep::tensor(t1.dual(), t2)).subst_invert();
    return g1 * g2;
}

RatFun mu_gl_pair(const SemisimpleParam& tau, const SemisimpleParam& tau2) {
    return mu_gl_pair_factors(tau, tau2).to_ratfun().monomial_canonical();
}

RatFun mu_gl_untwisted(const SemisimpleParam& tau, const SemisimpleParam& tau2) {
    return mu_gl_pair(tau, tau2);  // U specializes to T_b, same rational function
}

RatFun mu_gl_opposite(const SemisimpleParam& tau, const SemisimpleParam& tau2) {
    return mu_gl_pair_factors(tau, tau2).subst_power(2).to_ratfun().monomial_canonical();
}

MonomialRep r_operation(ClassicalKind kind, const SemisimpleParam& tau) {
    MonomialRep rep = MonomialRep::from_param(tau);
    switch (kind) {
        case ClassicalKind::SOodd: return rep.sym2();
        case ClassicalKind::Sp: return rep.wedge2();
        case ClassicalKind::Ueven: return rep.asai(false);
        case ClassicalKind::Uodd: return rep.asai(true);
    }
    throw validation_error("unknown classical kind");
}

BinomialProduct mu_classical_factors(const SemisimpleParam& tau,
                                     const ClassicalParam& pi) {
    const FieldContext* ctx = tau.ctx();
    bool unitary = pi.over_E();
    if (tau.over_E() != unitary)
        throw validation_error("tau must be a GL parameter over the kind's field E");
    if (pi.avatar().dimension() > 0 && pi.avatar().ctx() != ctx)
        throw validation_error("field context mismatch");
    unsigned ext = unitary ? 2 : 1;

    // gamma(s, phi_tau (x) phi^*) and gamma(-s, phi_tau^* (x) phi) in T_b,
    // then moved to the F-variable T (T_b = T^ext).
    MonomialRep t1 = MonomialRep::from_param(tau);
    MonomialRep av = MonomialRep::from_param(pi.avatar());
    BinomialProduct g1 = gamma_factors(MonomialRep::tensor(t1, av.dual()));
    BinomialProduct g2 = gamma_factors(MonomialRep::tensor(t1.dual(), av)).subst_invert();
    if (ext == 2) {
        g1 = g1.subst_power(2);
        g2 = g2.subst_power(2);
    }

    // gamma(2s, R phi_tau) and gamma(-2s, R phi_tau^*) in the F-variable.
    MonomialRep r = r_operation(pi.kind(), tau);
    BinomialProduct g3 = gamma_factors(r).subst_power(2);
    BinomialProduct g4 = gamma_factors(r.dual()).subst_invert().subst_power(2);

    return g1 * g2 * g3 * g4;
}

RatFun mu_classical(const SemisimpleParam& tau, const ClassicalParam& pi) {
    return mu_classical_factors(tau, pi).to_ratfun().monomial_canonical();
}

ClassicalParam ClassicalLevi::induced() const {
    SemisimpleParam avatar = core.avatar();
    for (const auto& blk : gl_blocks)
        avatar = direct_sum(direct_sum(avatar, blk), self_duality_dual(blk));
    return ClassicalParam(core.kind(), avatar);
}

IdentityCheck check_multiplicativity_classical(const SemisimpleParam& tau,
                                               const ClassicalLevi& levi) {
    ClassicalParam pi = levi.induced();
    BinomialProduct lhs = mu_classical_factors(tau, pi);
    BinomialProduct rhs = mu_classical_factors(tau, levi.core);
    unsigned ext = pi.over_E() ? 2 : 1;
    for (const auto& blk : levi.gl_blocks) {
        BinomialProduct a = mu_gl_pair_factors(tau, blk);
        BinomialProduct b = mu_gl_pair_factors(tau, self_duality_dual(blk));
        if (ext == 2) {
            a = a.subst_power(2);
            b = b.subst_power(2);
        }
        rhs = rhs * a * b;
    }
    return IdentityCheck{lhs.value_equals(rhs), lhs.str(), rhs.str()};
}

IdentityCheck check_multiplicativity_gl_blocks(const std::vector<SemisimpleParam>& taus,
                                               const ClassicalParam& pi) {
    if (taus.empty()) throw validation_error("need at least one GL block");
    SemisimpleParam tau = taus[0];
    for (size_t i = 1; i < taus.size(); ++i) tau = direct_sum(tau, taus[i]);
    BinomialProduct lhs = mu_classical_factors(tau, pi);

    unsigned ext = pi.over_E() ? 2 : 1;
    BinomialProduct rhs = BinomialProduct::one(tau.ctx());
    for (size_t i = 0; i < taus.size(); ++i) {
        for (size_t j = i + 1; j < taus.size(); ++j) {
            BinomialProduct cross =
                mu_gl_pair_factors(taus[i], self_duality_dual(taus[j])).subst_power(2);
            if (ext == 2) cross = cross.subst_power(2);
            rhs = rhs * cross;
        }
        rhs = rhs * mu_classical_factors(taus[i], pi);
    }
    return IdentityCheck{lhs.value_equals(rhs), lhs.str(), rhs.str()};
}

IdentityCheck check_multiplicativity_gl_pair(const std::vector<SemisimpleParam>& taus,
                                             const std::vector<SemisimpleParam>& taus2) {
    if (taus.empty() || taus2.empty())
        throw validation_error("need GL blocks on both sides");
    SemisimpleParam tau = taus[0];
    for (size_t i = 1; i < taus.size(); ++i) tau = direct_sum(tau, taus[i]);
    SemisimpleParam tau2 = taus2[0];
    for (size_t j = 1; j < taus2.size(); ++j) tau2 = direct_sum(tau2, taus2[j]);

    BinomialProduct lhs = mu_gl_pair_factors(tau, tau2);
    BinomialProduct rhs = BinomialProduct::one(tau.ctx());
    for (const auto& a : taus)
        for (const auto& b : taus2) rhs = rhs * mu_gl_pair_factors(a, b);
    return IdentityCheck{lhs.value_equals(rhs), lhs.str(), rhs.str()};
}

}  // namespace wdparam
