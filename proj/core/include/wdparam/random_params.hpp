#pragma once

#include <cstdint>
#include <random>

#include "wdparam/dictionary.hpp"

namespace wdparam {

/// Deterministic RNG wrapper: identical draws for identical seeds on every
/// platform (no use of distribution objects, whose output is
/// implementation-defined).
class ParamRng {
public:
    explicit ParamRng(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return (rng_() & 1) != 0; }

private:
    std::mt19937_64 rng_;
};

/// Random monomial eigenvalue c * zeta^a * sqrt(q)^b.  With squares = true
/// the value is the square of a random monomial, so products of any two
/// outputs have monomial square roots in K (keeps tensor-type
/// decompositions split).
FieldElem random_alpha(ParamRng& rng, const FieldContext* ctx, bool squares = false);

IrredSummand random_summand(ParamRng& rng, const FieldContext* ctx, BaseField base,
                            unsigned max_f, bool squares = false);

/// Random semisimple parameter of dimension in [1, max_dim]; eigenvalues are
/// biased towards shared nu-chains so monodromy is frequently nontrivial.
SemisimpleParam random_ss(ParamRng& rng, const FieldContext* ctx, BaseField base,
                          unsigned max_dim, bool squares = false);

SL2Param random_sl2(ParamRng& rng, const FieldContext* ctx, BaseField base,
                    unsigned max_dim);

/// Random Weil-Deligne parameter: random semisimple part plus a random
/// centralizer orbit as monodromy.
WDParam random_wd(ParamRng& rng, const FieldContext* ctx, BaseField base,
                  unsigned max_dim);

/// Tame levels M <= cap with p coprime to M whose inertia orbits (under q,
/// or q^2 over E) all have size <= max_f.
std::vector<unsigned> small_orbit_levels(unsigned q, BaseField base, unsigned max_f,
                                         unsigned cap = 12);

}  // namespace wdparam
