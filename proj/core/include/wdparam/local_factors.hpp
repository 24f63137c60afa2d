#pragma once

#include "wdparam/dictionary.hpp"
#include "wdparam/divisor.hpp"

namespace wdparam {

/// Denominator polynomial of the L-factor: det(1 - T Phi) on the inertia
/// invariants (of ker N when monodromy is present).  T is q^{-s} for the
/// parameter's own base field (so q_E^{-s} over E).
Poly l_denominator(const MonomialRep& rep);
/// det(1 - T Phi) on ker(N) cap (inertia invariants) for a monodromy
/// operator N given in the representation's basis.
Poly l_denominator(const MonomialRep& rep, const Matrix& N);
Poly l_denominator(const SemisimpleParam& p);
Poly l_denominator(const WDParam& w);
/// Same for the dual Weil-Deligne parameter (dual action, transposed N).
Poly l_denominator_dual(const WDParam& w);

/// L(s, .) = 1/det(1 - T Phi |_W).
RatFun l_factor(const SemisimpleParam& p);
RatFun l_factor(const WDParam& w);
RatFun l_factor(const SL2Param& p);

/// Gamma up to monomial: L(1-s, dual)/L(s, .), with s -> 1-s realized as
/// T -> q^{-1} T^{-1} (q^{-2} over E) and the result in canonical
/// monomial-normalized form.
RatFun gamma_ratio(const WDParam& w);
RatFun gamma_ratio(const SemisimpleParam& p);
/// Gamma of a monomial representation that need not be decomposed (tensor
/// products, Sym^2/wedge^2/Asai images).
RatFun gamma_ratio(const MonomialRep& rep);

/// A product of factors (1 - A T^c)^e up to monomial, kept factored.  Every
/// L-ratio of semisimple data in this library is such a product, and staying
/// factored avoids number-field gcd blowups on the identity-checking paths.
class BinomialProduct {
public:
    explicit BinomialProduct(const FieldContext* ctx) : ctx_(ctx) {}
    static BinomialProduct one(const FieldContext* ctx) { return BinomialProduct(ctx); }

    const FieldContext* ctx() const { return ctx_; }
    void mul_factor(unsigned c, const FieldElem& a, int e);
    BinomialProduct operator*(const BinomialProduct& o) const;
    BinomialProduct inv() const;
    /// T -> T^k
    BinomialProduct subst_power(unsigned k) const;
    /// T -> T^{-1}, normalized back up to monomial: (c, A) -> (c, A^{-1}).
    BinomialProduct subst_invert() const;
    BinomialProduct galois(long k) const;

    bool is_one() const { return factors_.empty(); }
    /// Exact value equality up to monomial: factor maps compared first, with
    /// an expanded cross-multiplication fallback for presentation mismatches
    /// such as (1 - A^2 T^2) vs (1 - A T)(1 + A T).
    bool value_equals(const BinomialProduct& o) const;

    /// Expand into a rational function (numerator = positive factors).
    RatFun to_ratfun() const;
    std::string str() const;

private:
    Poly expand(bool positive_part) const;
    const FieldContext* ctx_;
    std::map<std::pair<unsigned, FieldElem>, int> factors_;
};

/// Factored gamma of a semisimple monomial representation.
BinomialProduct gamma_factors(const MonomialRep& rep);

/// The divisor of the four-L-factor ratio attached to a pair of semisimple
/// parameters, organized by unramified-twist family.  For the family of an
/// irreducible of dimension f, the divisor lives on the chain coordinate
/// u = T^f (the T-points of a factor 1 - c T^f are the f-th roots of 1/c,
/// which need not lie in K; the twist classes themselves are K-rational).
/// A nu-step moves u by q^{f} (q^{2f} over E).
struct GammaFamily {
    unsigned orbit = 0;
    unsigned f = 1;
    Divisor div;

    bool operator==(const GammaFamily& o) const {
        return orbit == o.orbit && f == o.f && div == o.div;
    }
};

class GammaDivisor {
public:
    GammaDivisor() = default;

    void add(unsigned orbit, unsigned f, const FieldElem& point, int mult);
    const std::vector<GammaFamily>& families() const { return families_; }
    const GammaFamily* family(unsigned orbit) const;
    bool empty() const { return families_.empty(); }

    GammaDivisor operator+(const GammaDivisor& o) const;
    GammaDivisor operator*(int k) const;
    bool operator==(const GammaDivisor& o) const { return families_ == o.families_; }
    bool operator!=(const GammaDivisor& o) const { return !(*this == o); }
    GammaDivisor galois(long k, const FieldContext* ctx, unsigned long q_act) const;

    std::string str() const;

private:
    std::vector<GammaFamily> families_;  // sorted by orbit
};

GammaDivisor big_gamma(const SemisimpleParam& phi1, const SemisimpleParam& phi2);

}  // namespace wdparam
