#pragma once

#include "wdparam/classical.hpp"
#include "wdparam/local_factors.hpp"

namespace wdparam {

/// Plancherel measure of a pair of GL parameters, as a rational function in
/// the product variable U = q_b^{-(s-t)} over the parameters' base field:
///   mu(tau_s (x) tau'_t) = gamma(s-t, phi (x) phi'^*) gamma(t-s, phi^* (x) phi').
/// The factored form is the workhorse; the RatFun front is the expansion.
BinomialProduct mu_gl_pair_factors(const SemisimpleParam& tau,
                                   const SemisimpleParam& tau2);
RatFun mu_gl_pair(const SemisimpleParam& tau, const SemisimpleParam& tau2);

/// Restrictions of the pair measure: at q^{-t} = 1 (variable T_b) and along
/// t = -s (variable T_b^2).
RatFun mu_gl_untwisted(const SemisimpleParam& tau, const SemisimpleParam& tau2);
RatFun mu_gl_opposite(const SemisimpleParam& tau, const SemisimpleParam& tau2);

/// The R-operation attached to a classical kind (the GL factor's
/// self-duality type): Sym^2, wedge^2, or As^{+-}.
MonomialRep r_operation(ClassicalKind kind, const SemisimpleParam& tau);

/// Plancherel measure of tau_s (x) pi on the parameter side, as a rational
/// function in T = q^{-s} (the F-variable):
///   gamma(s, phi_tau (x) phi^*) gamma(-s, phi_tau^* (x) phi)
///   gamma(2s, R phi_tau) gamma(-2s, R phi_tau^*).
BinomialProduct mu_classical_factors(const SemisimpleParam& tau,
                                     const ClassicalParam& pi);
RatFun mu_classical(const SemisimpleParam& tau, const ClassicalParam& pi);

/// Parameter-side Levi data for the multiplicativity identities: pi is an
/// irreducible subquotient of induction from (GL blocks) x (core classical
/// group), so its avatar is avatar(core) + sum of (block + conj-dual block).
struct ClassicalLevi {
    ClassicalParam core;
    std::vector<SemisimpleParam> gl_blocks;

    ClassicalParam induced() const;
};

/// Result of one identity check; both sides are kept (factored form) for
/// the failure report.
struct IdentityCheck {
    bool holds = false;
    std::string lhs, rhs;
};

/// (1) mu(tau_s (x) pi) = mu(tau_s (x) core) prod_i mu^GL(tau_s (x) rho_i)
///                                         mu^GL(tau_s (x) (rho_i^c)^dual).
IdentityCheck check_multiplicativity_classical(const SemisimpleParam& tau,
                                               const ClassicalLevi& levi);

/// (2) tau an irreducible subquotient of the GL induction of tau'_1,...:
/// mu(tau_s (x) pi) = prod_{i<j} mu^GL((tau'_i)_s (x) ((tau'_j)^c)^dual_{-s})
///                    prod_i mu((tau'_i)_s (x) pi).
IdentityCheck check_multiplicativity_gl_blocks(const std::vector<SemisimpleParam>& taus,
                                               const ClassicalParam& pi);

/// (3) pair measure of GL inductions: mu(tau_s (x) tau'_t) factors over all
/// block pairs.
IdentityCheck check_multiplicativity_gl_pair(const std::vector<SemisimpleParam>& taus,
                                             const std::vector<SemisimpleParam>& taus2);

}  // namespace wdparam
