#pragma once

#include "wdparam/monodromy.hpp"

namespace wdparam {

/// The four integrality predicates of a Weil-Deligne parameter at a prime
/// ell not dividing 2*M*q, each computed by its own route:
///  - ss_integral: every Frobenius eigenvalue is an ell-unit (valuation of
///    the monomial coefficient);
///  - frob_ss_integral: eigenvalue data extracted through the multiplicative
///    Jordan decomposition of Frobenius-power blocks;
///  - integral: compactness of the full image (inertia and monodromy parts
///    are compact, so this reduces to the Frobenius-semisimplified part);
///  - git_integral: all characteristic-polynomial coefficients of the
///    Frobenius power on each summand block are ell-integral with unit
///    constant term.
struct IntegralReport {
    bool integral = false;
    bool frob_ss_integral = false;
    bool ss_integral = false;
    bool git_integral = false;

    bool all_agree() const {
        return integral == frob_ss_integral && integral == ss_integral &&
               integral == git_integral;
    }
};

IntegralReport integral_predicates(const WDParam& w, unsigned long ell);

/// Valuation of the determinant character at ell (sum over eigenvalues).
long det_valuation(const SemisimpleParam& p, unsigned long ell);
bool det_integral(const SemisimpleParam& p, unsigned long ell);

}  // namespace wdparam
