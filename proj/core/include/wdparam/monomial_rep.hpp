#pragma once

#include "wdparam/params.hpp"

namespace wdparam {

/// A tame representation presented on a monomial basis: inertia acts
/// diagonally by zeta^{exponent[i]} and the geometric Frobenius permutes the
/// basis with scalars.  Every structural operation in this library (tensor,
/// Sym^2, wedge^2, Asai, duals, restriction) stays in this class, so
/// decomposition reduces to cycle analysis plus binomial root extraction.
class MonomialRep {
public:
    struct Arrow {
        size_t to = 0;
        FieldElem scale;
    };
    /// One Frobenius cycle: starting exponent, length, and the product of
    /// the scalars around the cycle.
    struct Cycle {
        unsigned exponent = 0;
        unsigned length = 1;
        FieldElem wrap;
    };

    MonomialRep(const FieldContext* ctx, BaseField base) : ctx_(ctx), base_(base) {}

    static MonomialRep from_param(const SemisimpleParam& p);

    const FieldContext* ctx() const { return ctx_; }
    BaseField base() const { return base_; }
    size_t dim() const { return exponent_.size(); }
    const std::vector<unsigned>& exponents() const { return exponent_; }
    const std::vector<Arrow>& arrows() const { return phi_; }

    size_t add_basis(unsigned exponent);
    void set_arrow(size_t from, size_t to, FieldElem scale);
    /// Validates that phi is a scaled permutation compatible with the tame
    /// relation (exponent[to] = q_act * exponent[from]).
    void validate() const;

    MonomialRep dual() const;
    static MonomialRep tensor(const MonomialRep& a, const MonomialRep& b);
    MonomialRep sym2() const;
    MonomialRep wedge2() const;
    /// Tensor induction to F of a representation over E; sign = false gives
    /// the plain induction, sign = true twists Frobenius by -1.
    MonomialRep asai(bool minus_sign) const;
    /// Restriction of an F-representation to the quadratic subgroup:
    /// Frobenius squared, same inertia, base flips to E.
    MonomialRep restrict_to_E() const;
    /// Twist the Frobenius action by a scalar.
    MonomialRep scale_frobenius(const FieldElem& c) const;
    MonomialRep galois(long k) const;

    std::vector<Cycle> cycles() const;
    /// Cycles of the inertia-fixed part (exponent = 0 labels only).
    std::vector<Cycle> invariant_cycles() const;

    /// Decompose into irreducible summands; throws compute_error when a
    /// cyclic block does not split over K.
    SemisimpleParam to_param() const;

    /// Matrices in this basis order.
    Matrix phi_matrix() const;
    Matrix sigma_matrix() const;

private:
    const FieldContext* ctx_;
    BaseField base_;
    std::vector<unsigned> exponent_;
    std::vector<Arrow> phi_;
};

/// All monomial-form solutions x in K of x^d = a (a in monomial form).
/// Complete for monomial roots; empty when a is not monomial.
std::vector<FieldElem> monomial_roots(unsigned d, const FieldElem& a);

/// Summands of the cyclic module with Frobenius cycle (exponent, length,
/// wrap): orbit size g divides the length, and the block splits into
/// (length/g) irreducibles with Frobenius^g eigenvalues the roots of
/// x^{length/g} = wrap.
std::vector<IrredSummand> decompose_cycle(const FieldContext* ctx, unsigned long q_act,
                                          const MonomialRep::Cycle& c);

}  // namespace wdparam
