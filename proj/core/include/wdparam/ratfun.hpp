#pragma once

#include "wdparam/field.hpp"

namespace wdparam {

/// Univariate polynomial over K in the formal variable T = q^{-s}.
/// Coefficients indexed by degree; normal form has no trailing zeros
/// (the zero polynomial is an empty vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(const FieldContext* ctx) : ctx_(ctx) {}
    Poly(const FieldContext* ctx, std::vector<FieldElem> coeffs);

    static Poly zero(const FieldContext* ctx) { return Poly(ctx); }
    static Poly constant(const FieldElem& c);
    static Poly one(const FieldContext* ctx) { return constant(FieldElem::one(ctx)); }
    /// 1 - lambda*T (the atomic factor of every L-polynomial here).
    static Poly one_minus(const FieldElem& lambda, unsigned power = 1);
    static Poly monomial(const FieldElem& c, unsigned deg);

    const FieldContext* ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const FieldElem& operator[](size_t i) const { return c_[i]; }
    const std::vector<FieldElem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& c) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }

    /// (quotient, remainder) against a nonzero divisor.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    static Poly gcd(Poly a, Poly b);  // monic gcd
    Poly monic() const;
    FieldElem eval(const FieldElem& x) const;
    /// T^k | p: largest such k (0 for nonzero constant term; 0 for zero poly).
    unsigned valuation() const;
    Poly shift_down(unsigned k) const;  // divide by T^k (exact)
    /// Multiplicity of the root T = x, removing it is left to callers.
    unsigned root_multiplicity(const FieldElem& x) const;
    /// Exact division by (T - x); root must divide.
    Poly deflate(const FieldElem& x) const;
    /// p(c*T)
    Poly subst_scale(const FieldElem& c) const;
    /// p(T^k), k >= 1
    Poly subst_power(unsigned k) const;
    /// Galois action on coefficients.
    Poly galois(long k) const;

    std::string str() const;

private:
    void trim();
    const FieldContext* ctx_ = nullptr;
    std::vector<FieldElem> c_;
};

/// Rational function in T over K, reduced (gcd(num, den) = 1) with monic
/// denominator.  This is the value type for L-factors, gamma ratios and
/// Plancherel measures; "up to monomial" equality is decided through
/// monomial_canonical().
class RatFun {
public:
    RatFun() = default;
    RatFun(Poly num, Poly den);

    static RatFun zero(const FieldContext* ctx) {
        return RatFun(Poly::zero(ctx), Poly::one(ctx));
    }
    static RatFun one(const FieldContext* ctx) {
        return RatFun(Poly::one(ctx), Poly::one(ctx));
    }
    static RatFun from_poly(Poly p);
    static RatFun constant(const FieldElem& c) { return from_poly(Poly::constant(c)); }

    const FieldContext* ctx() const { return num_.ctx(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inv() const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// Substitute T -> c * T^e for nonzero integer e (Laurent substitution,
    /// cleared back into a rational function).
    RatFun subst_monomial(const FieldElem& c, int e) const;
    RatFun galois(long k) const;

    /// Canonical representative of the class f * (c T^k): strips T-powers
    /// and scales so that num(0) = den(0) = 1.  Two rational functions are
    /// equal up to monomial iff their canonical forms are equal.
    RatFun monomial_canonical() const;
    /// True when the function is c*T^k.
    bool is_monomial() const;

    std::string str() const;

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace wdparam
