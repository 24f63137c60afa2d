#pragma once

#include "wdparam/matrix.hpp"

namespace wdparam {

/// Base field of the Weil group a parameter lives over: F itself, or the
/// unramified quadratic extension E/F (used by unitary-type parameters).
/// Over E the Frobenius is the square of the F-Frobenius, so inertia orbits
/// are taken under multiplication by q^2.
enum class BaseField { F, E };

/// Orbit of e under multiplication by q_act modulo M.
std::vector<unsigned> frobenius_orbit(unsigned e, unsigned long q_act, unsigned M);
unsigned orbit_size(unsigned e, unsigned long q_act, unsigned M);
unsigned orbit_min(unsigned e, unsigned long q_act, unsigned M);

/// A tame irreducible: inertia-character orbit (canonical minimal
/// representative), its size f (= the dimension), and the eigenvalue of the
/// f-th power of the stored geometric Frobenius on the zeta^{zeta_exp} line.
struct IrredSummand {
    unsigned zeta_exp = 0;
    unsigned f = 1;
    FieldElem alpha;

    bool operator==(const IrredSummand& o) const {
        return zeta_exp == o.zeta_exp && f == o.f && alpha == o.alpha;
    }
    bool operator<(const IrredSummand& o) const {
        if (zeta_exp != o.zeta_exp) return zeta_exp < o.zeta_exp;
        if (f != o.f) return f < o.f;
        return alpha < o.alpha;
    }
};

/// Multiset of tame irreducibles, canonically sorted.  Immutable after
/// construction; operations are pure.
class SemisimpleParam {
public:
    SemisimpleParam() = default;
    /// Canonicalizes every summand (minimal orbit representative, validated
    /// orbit size) and sorts.
    SemisimpleParam(const FieldContext* ctx, BaseField base,
                    std::vector<IrredSummand> summands);

    static SemisimpleParam empty(const FieldContext* ctx, BaseField base = BaseField::F) {
        return SemisimpleParam(ctx, base, {});
    }
    /// Unramified character with Frobenius eigenvalue alpha (zeta_exp = 0).
    static SemisimpleParam character(const FieldElem& alpha, BaseField base = BaseField::F);

    const FieldContext* ctx() const { return ctx_; }
    BaseField base() const { return base_; }
    bool over_E() const { return base_ == BaseField::E; }
    /// Multiplier for inertia orbits: q (over F) or q^2 (over E), mod M.
    unsigned long q_act() const;
    /// Norm shift of one geometric-Frobenius power: q over F, q^2 over E.
    long frobenius_degree() const { return over_E() ? 2 : 1; }

    const std::vector<IrredSummand>& summands() const { return summands_; }
    unsigned dimension() const;
    bool empty_param() const { return summands_.empty(); }

    bool operator==(const SemisimpleParam& o) const;
    bool operator!=(const SemisimpleParam& o) const { return !(*this == o); }
    bool operator<(const SemisimpleParam& o) const;

    std::string str() const;

private:
    const FieldContext* ctx_ = nullptr;
    BaseField base_ = BaseField::F;
    std::vector<IrredSummand> summands_;
};

/// Two parameters are isomorphic iff their canonical forms agree.
bool is_isomorphic(const SemisimpleParam& a, const SemisimpleParam& b);

/// Explicit matrix model of a semisimple parameter: Sigma diagonal of
/// inertia eigenvalues, Phi the geometric Frobenius (cyclic block per
/// summand with the eigenvalue closing each cycle).  Satisfies
/// Phi^{-1} Sigma Phi = Sigma^{q_act}.
struct Realization {
    Matrix phi;
    Matrix sigma;
    /// Inertia exponent of each basis coordinate.
    std::vector<unsigned> exponent;
    /// (summand index, offset inside the cyclic block) per coordinate.
    std::vector<std::pair<size_t, unsigned>> label;
};

Realization realize(const SemisimpleParam& p);

/// Segment sigma (x) Sp(d).
struct Segment {
    IrredSummand sigma;
    unsigned d = 1;

    bool operator==(const Segment& o) const { return d == o.d && sigma == o.sigma; }
    bool operator<(const Segment& o) const {
        if (!(sigma == o.sigma)) return sigma < o.sigma;
        return d < o.d;
    }
};

/// Multiset of segments; dimension = sum f_i * d_i.
class SL2Param {
public:
    SL2Param() = default;
    SL2Param(const FieldContext* ctx, BaseField base, std::vector<Segment> segments);

    const FieldContext* ctx() const { return ctx_; }
    BaseField base() const { return base_; }
    const std::vector<Segment>& segments() const { return segments_; }
    unsigned dimension() const;

    bool operator==(const SL2Param& o) const;
    bool operator!=(const SL2Param& o) const { return !(*this == o); }

    std::string str() const;

private:
    const FieldContext* ctx_ = nullptr;
    BaseField base_ = BaseField::F;
    std::vector<Segment> segments_;
};

/// Frobenius-semisimple parameter with nilpotent monodromy, in the realized
/// basis of its semisimple part.  The constructor enforces
///   N nilpotent,  Sigma N Sigma^{-1} = N,  Phi N Phi^{-1} = q^{-deg} N,
/// (deg = 1 over F, 2 over E) with Phi the stored geometric Frobenius.
class WDParam {
public:
    WDParam() = default;
    WDParam(SemisimpleParam ss, Matrix N);
    /// Monodromy-free parameter.
    explicit WDParam(SemisimpleParam ss);

    const SemisimpleParam& ss() const { return ss_; }
    const Matrix& monodromy() const { return N_; }
    unsigned dimension() const { return ss_.dimension(); }

private:
    SemisimpleParam ss_;
    Matrix N_;
};

}  // namespace wdparam
