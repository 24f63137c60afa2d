#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdparam {

/// Error for inputs that fail schema/precondition validation.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error raised when an exact computation cannot proceed (division by zero,
/// non-split factor, missing candidate eigenvalue, ...).
struct compute_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient field K = Q(zeta_M, sqrt(q)) for a fixed tame level M and
/// prime power q with p ∤ M.  Elements are represented on the basis
/// {zeta^i * sqrt(q)^j : 0 <= i < phi(M), j in {0,1}} with integer
/// numerators over a common positive denominator.
///
/// When q is a perfect square, sqrt(q) is identified with the integer root
/// and the j = 1 coordinates are folded away; the code path is otherwise
/// uniform.
class FieldContext {
public:
    FieldContext(unsigned M, unsigned q);

    unsigned M() const { return M_; }
    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned phi() const { return phi_; }
    bool sqrt_q_is_integer() const { return q_square_; }
    unsigned sqrt_q_integer() const { return q_sqrt_; }
    const mpz_class& q_z() const { return q_z_; }

    /// Monic integer coefficients of the M-th cyclotomic polynomial,
    /// degree phi(M), index = power of x.
    const std::vector<mpz_class>& cyclotomic() const { return cyclo_; }

    /// zeta^t expressed on the power basis of Q(zeta_M); t is reduced mod M.
    const std::vector<mpz_class>& zeta_power(unsigned t) const {
        return zeta_pow_[t % M_];
    }

private:
    unsigned M_, q_, p_, phi_;
    bool q_square_ = false;
    unsigned q_sqrt_ = 0;
    mpz_class q_z_;
    std::vector<mpz_class> cyclo_;
    std::vector<std::vector<mpz_class>> zeta_pow_;
};

/// Monomial form c * zeta^a * sqrt(q)^b with c rational.
struct Monomial {
    mpq_class c;
    unsigned zeta_exp = 0;  // mod M
    unsigned sqrt_pow = 0;  // 0 or 1
};

/// An element of K = Q(zeta_M, sqrt(q)), always kept in canonical form:
/// reduced mod the cyclotomic polynomial and t^2 - q, common denominator
/// positive and coprime to the numerator content.
///
/// Values are immutable in practice (all operations return new elements);
/// sharing across threads is safe.
class FieldElem {
public:
    FieldElem() : ctx_(nullptr), den_(1) {}
    explicit FieldElem(const FieldContext* ctx);

    static FieldElem zero(const FieldContext* ctx) { return FieldElem(ctx); }
    static FieldElem one(const FieldContext* ctx);
    static FieldElem from_int(const FieldContext* ctx, long v);
    static FieldElem from_mpq(const FieldContext* ctx, const mpq_class& v);
    /// zeta^a (a arbitrary, reduced mod M).
    static FieldElem zeta(const FieldContext* ctx, long a);
    /// sqrt(q)^k for any integer k (negative allowed).
    static FieldElem sqrt_q_pow(const FieldContext* ctx, long k);
    /// q^k for integer k.
    static FieldElem q_pow(const FieldContext* ctx, long k);
    /// Build from an explicit monomial.
    static FieldElem from_monomial(const FieldContext* ctx, const Monomial& m);

    const FieldContext* ctx() const { return ctx_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// The rational value, if this element lies in Q.
    std::optional<mpq_class> as_rational() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem inv() const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem pow(long e) const;

    /// Galois action zeta -> zeta^k fixing sqrt(q); requires gcd(k, M) = 1.
    FieldElem galois(long k) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    /// Total order on canonical forms (for map keys / sorting); not a
    /// field-compatible order.
    bool operator<(const FieldElem& o) const;

    /// Detect monomial form c * zeta^a * sqrt(q)^b; returns the canonical
    /// representative (smallest a, b minimal).
    std::optional<Monomial> as_monomial() const;

    /// If this element equals q^{j} (integer j in [-bound, bound]), return j.
    std::optional<long> as_q_power(long bound = 64) const;

    std::string str() const;

    // Raw access used by serialization.
    const std::vector<mpz_class>& raw_num() const { return num_; }
    const mpz_class& raw_den() const { return den_; }
    static FieldElem from_raw(const FieldContext* ctx, std::vector<mpz_class> num,
                              mpz_class den);

private:
    void normalize();
    void require_same_ctx(const FieldElem& o) const;

    const FieldContext* ctx_;
    std::vector<mpz_class> num_;  // size 2*phi, layout [i + phi*j]
    mpz_class den_;
};

/// ell-adic valuation of a monomial-form element, defined when ell ∤ 2Mq.
/// Rejects non-monomial elements with compute_error.
long ell_valuation(const FieldElem& x, unsigned long ell);

}  // namespace wdparam
