#pragma once

#include "wdparam/monomial_rep.hpp"

namespace wdparam {

/// Dual parameter: inverted inertia orbit and inverted Frobenius eigenvalue.
SemisimpleParam dual(const SemisimpleParam& p);
/// Conjugation action of Gal(E/F) on a parameter over E: zeta -> zeta^q,
/// eigenvalue fixed.
SemisimpleParam conj(const SemisimpleParam& p);
/// (rho^c)^dual for parameters over E.
SemisimpleParam conj_dual(const SemisimpleParam& p);
SemisimpleParam direct_sum(const SemisimpleParam& a, const SemisimpleParam& b);
/// Twist by the unramified character with Frobenius value c: alpha -> alpha c^f.
SemisimpleParam twist_unramified(const SemisimpleParam& p, const FieldElem& c);
/// Twist by nu^k, nu the unramified character with nu(Fr_geo) = q^{-1}
/// (q^{-2} over E); k may be half-integral in units of 1/2.
SemisimpleParam twist_nu_halves(const SemisimpleParam& p, long half_steps);
/// Galois action on the parameter (zeta -> zeta^k on both the orbit and the
/// eigenvalues).
SemisimpleParam galois(const SemisimpleParam& p, long k);

SemisimpleParam tensor(const SemisimpleParam& a, const SemisimpleParam& b);
std::pair<SemisimpleParam, SemisimpleParam> sym2_ext2(const SemisimpleParam& a);
/// Tensor induction to F; plus = untwisted, minus twists by the unramified
/// quadratic character of F.
SemisimpleParam asai(const SemisimpleParam& rho, bool plus);

/// Determinant character data: the product of all Frobenius eigenvalues
/// together with the sum of inertia exponents (det of a realized parameter).
FieldElem det_frobenius(const SemisimpleParam& p);

/// Structural decomposition of an explicit pair (Phi, Sigma): Sigma of
/// finite order acting through mu_M, Phi semisimple on each isotypic block
/// with Frobenius-power eigenvalues in `candidates`.
SemisimpleParam decompose(const Matrix& phi, const Matrix& sigma, BaseField base,
                          const std::vector<FieldElem>& candidates);

/// Multiplicative Jordan decomposition Phi = Phi_ss * u with u unipotent
/// commuting with Phi_ss and Sigma.
struct FrobeniusSS {
    Matrix phi_ss;
    Matrix sigma;
    Matrix unipotent;
};
FrobeniusSS frobenius_ss(const Matrix& phi, const Matrix& sigma,
                         const std::vector<FieldElem>& candidates);

}  // namespace wdparam
