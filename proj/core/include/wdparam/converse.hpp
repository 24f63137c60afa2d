#pragma once

#include <functional>

#include "wdparam/local_factors.hpp"

namespace wdparam {

/// One unramified-twist family of irreducibles: an inertia orbit and its
/// size.  The canonical family representative normalizes alpha to 1.
struct TwistFamily {
    unsigned orbit = 0;
    unsigned f = 1;

    SemisimpleParam representative(const FieldContext* ctx, BaseField base) const {
        return SemisimpleParam(ctx, base, {IrredSummand{orbit, f, FieldElem::one(ctx)}});
    }
};

/// An unramified-twist class of irreducibles: family plus the Frobenius^f
/// eigenvalue pinning the class.  The nu-shift acts freely by
/// alpha -> alpha * q^{-f} (q^{-2f} over E), generating the chains the
/// converse argument deconvolves along.
struct TwistClass {
    unsigned orbit = 0;
    unsigned f = 1;
    FieldElem alpha_rep;
};

/// One canonical representative per unramified-twist family with f <= n.
std::vector<TwistFamily> enumerate_irreducibles(unsigned n, const FieldContext* ctx,
                                                BaseField base = BaseField::F);

using GammaOracle = std::function<GammaDivisor(const SemisimpleParam&)>;

/// Reconstruct the unique semisimple parameter of dimension <= n whose pair
/// divisors against all irreducibles of dimension <= n match the oracle.
/// For each family the divisor is read as a finitely supported function on
/// the nu-chain and the second-difference equation
///   d_k = -m_{k+1} + 2 m_k - m_{k-1}
/// is solved for the unique finitely supported m >= 0.  Inconsistent
/// oracles (no such solution, or dimension overflow) are rejected.
SemisimpleParam reconstruct(const GammaOracle& oracle, unsigned n,
                            const FieldContext* ctx, BaseField base = BaseField::F);

}  // namespace wdparam
