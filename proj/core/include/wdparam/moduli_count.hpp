#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wdparam {

/// Exhaustive counting of tame cocycle points over a finite field: pairs
/// (Phi, Sigma) in GL_n(F_ell)^2 with Phi Sigma Phi^{-1} = Sigma^q and the
/// order of Sigma coprime to p (the residue characteristic of q).  Only
/// n <= 2 is supported (the state space is enumerated in full).
struct ModuliCountResult {
    std::uint64_t points = 0;
    std::uint64_t conjugation_orbits = 0;  // GL_n(F_ell) acting by simultaneous conjugation
    std::uint64_t twist_orbits = 0;        // unramified twists Phi -> c Phi
};

/// Double-loop oracle: test the relation on every pair.
std::uint64_t count_points_pairs(unsigned n, unsigned long q, unsigned long ell);
/// Orbit-stabilizer route: for each admissible Sigma conjugate to Sigma^q,
/// add the order of its centralizer.
std::uint64_t count_points_centralizer(unsigned n, unsigned long q, unsigned long ell);

/// Full count with optional orbit tables (orbits need the pair enumeration).
ModuliCountResult count_points(unsigned n, unsigned long q, unsigned long ell,
                               bool with_orbits = false);

/// Closed form for n = 1: (ell - 1) * (prime-to-p part of gcd(q-1, ell-1)).
std::uint64_t count_points_n1_closed_form(unsigned long q, unsigned long ell);

/// Heuristic dimension report: log_ell(count) against dim GL_n = n^2.
struct DimensionProbeRow {
    unsigned long ell = 0;
    std::uint64_t count = 0;
    double log_ell_count = 0.0;
    unsigned dim_expected = 0;
};
std::vector<DimensionProbeRow> dimension_probe(unsigned n, unsigned long q,
                                               const std::vector<unsigned long>& ells);

}  // namespace wdparam
