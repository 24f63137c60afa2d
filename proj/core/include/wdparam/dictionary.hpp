#pragma once

#include "wdparam/param_ops.hpp"

namespace wdparam {

/// nu-chain decomposition of a semisimple parameter: summand instances
/// grouped by (orbit, eigenvalue modulo integer powers of q^{deg*f}), laid
/// out along contiguous positions.  Position t+1 carries eigenvalue
/// alpha_t * q^{-deg*f} (one geometric nu-step down); positions may be empty
/// when the parameter skips a link.
struct NuChain {
    unsigned orbit = 0;
    unsigned f = 1;
    /// eigenvalue at each position, highest first
    std::vector<FieldElem> alphas;
    /// indices into p.summands() sitting at each position
    std::vector<std::vector<size_t>> instances;

    unsigned multiplicity(size_t pos) const {
        return pos < instances.size() ? static_cast<unsigned>(instances[pos].size()) : 0;
    }
    size_t length() const { return alphas.size(); }
};

std::vector<NuChain> nu_chains(const SemisimpleParam& p);

/// Starting basis column of each summand instance in the canonical realized
/// basis (blocks in canonical order).
std::vector<size_t> block_offsets(const SemisimpleParam& p);

/// Monodromy from the SL2 side: each segment (sigma, d) contributes the
/// summands sigma * nu^{i-(d-1)/2} and the shift maps between consecutive
/// twists.
WDParam sl2_to_wd(const SL2Param& p);

/// Segment recovery through the kernel filtration of N along nu-chains.
/// Errors signal a violated Weil-Deligne invariant.
SL2Param wd_to_sl2(const WDParam& w);

SemisimpleParam semisimplify(const SL2Param& p);
SemisimpleParam semisimplify(const WDParam& w);

/// Isomorphism of Weil-Deligne parameters: isomorphic semisimple parts and
/// conjugate monodromy (same segment data).
bool wd_isomorphic(const WDParam& a, const WDParam& b);

}  // namespace wdparam
