#pragma once

#include <map>

#include "wdparam/ratfun.hpp"

namespace wdparam {

/// Finitely supported integer-valued map on points T = lambda, lambda in K^x.
/// T = 0 and the point at infinity are excluded (everything here is computed
/// up to monomial).  Addition is pointwise; zero multiplicities are dropped.
class Divisor {
public:
    Divisor() = default;

    void add(const FieldElem& point, int mult);
    int multiplicity(const FieldElem& point) const;
    bool empty() const { return support_.empty(); }
    size_t size() const { return support_.size(); }
    const std::map<FieldElem, int>& support() const { return support_; }

    Divisor operator+(const Divisor& o) const;
    Divisor operator-() const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(int k) const;
    bool operator==(const Divisor& o) const { return support_ == o.support_; }
    bool operator!=(const Divisor& o) const { return !(*this == o); }

    /// sigma: zeta -> zeta^k applied to every support point.
    Divisor galois(long k) const;

    std::string str() const;

private:
    std::map<FieldElem, int> support_;
};

/// Divisor of zeros minus poles of f at finite nonzero T.  Roots are peeled
/// against the candidate set; if a nonconstant factor survives, the
/// irreducible remainder is reported in the error message.  The candidate
/// set is the caller's knowledge of the spectrum (products of known
/// eigenvalues); general root finding over K is out of scope.
Divisor ratfun_divisor(const RatFun& f, const std::vector<FieldElem>& candidates);

/// Convenience overload for split-linear numerators/denominators whose roots
/// can be read off degree-1 factors after candidate-free peeling of the
/// constant and linear parts; errors otherwise.
Divisor ratfun_divisor(const RatFun& f);

}  // namespace wdparam
