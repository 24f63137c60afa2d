#pragma once

#include "wdparam/local_factors.hpp"

namespace wdparam {

/// vec(A X) and vec(X A) as operators on the n^2 coordinates X_{ij}
/// (index i*n + j).
Matrix left_mult_operator(const Matrix& A);
Matrix right_mult_operator(const Matrix& A);
/// ad(N): X -> N X - X N.
Matrix ad_operator(const Matrix& N);

/// Basis (as columns of an n^2 x k matrix) of the space of legal monodromy
/// operators V_r = {v : Ad(Phi) v = q^{-deg} v, Ad(Sigma) v = v}.
Matrix monodromy_space(const SemisimpleParam& r);
/// The twisted fixed space E_r = {X : Ad(Phi) X = q^{deg} X, Ad(Sigma) X = X}
/// carrying the conormal criterion.
Matrix twisted_fixed_space(const SemisimpleParam& r);

/// An orbit of the centralizer of r on V_r, recorded by its segment data
/// (equivalently an SL2-parameter with semisimple part r), its rank
/// sequence and a representative monodromy in the canonical realized basis.
struct OrbitDescriptor {
    SL2Param sl2;
    std::vector<unsigned> rank_sequence;  // rank N, rank N^2, ... (last nonzero)
    Matrix representative;
};

/// Lexicographic comparison of rank sequences (longer/greater wins).
bool rank_lex_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b);

/// All centralizer orbits on V_r, combinatorially as segment refinements of
/// the nu-chain structure.  Throws when dimension exceeds the bound.
std::vector<OrbitDescriptor> enumerate_orbits(const SemisimpleParam& r,
                                              unsigned bound = 6);

/// Conormal criterion: the orbit of N is open iff ad(N) has trivial kernel
/// on the twisted fixed space.
bool is_open(const SemisimpleParam& r, const Matrix& N);

/// Order of the pole of L(s, Ad phi) at s = 1: the dimension of
/// {X in ker(ad N) : Ad(Sigma) X = X, Ad(Phi) X = q^{deg} X}.
unsigned pole_order_at_1(const WDParam& w);
unsigned pole_order_at_1(const SL2Param& p);
/// Same value through the adjoint L-factor (multiplicity of the root
/// T = q^{-deg} of the denominator).
unsigned pole_order_at_1_via_lfactor(const WDParam& w);
bool l_holomorphic_at_1(const WDParam& w);
bool l_holomorphic_at_1(const SL2Param& p);

/// Verifies that exactly one orbit is open, that it is the unique orbit
/// with holomorphic adjoint L-factor at s = 1, and that it is the
/// rank-lexicographically maximal one; returns it.  A failure here would
/// falsify the pinned Frobenius convention, so the error carries a dump.
OrbitDescriptor check_gpr_uniqueness(const SemisimpleParam& r, unsigned bound = 6);

}  // namespace wdparam
