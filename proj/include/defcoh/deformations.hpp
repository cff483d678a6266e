#ifndef DEFCOH_DEFORMATIONS_HPP
#define DEFCOH_DEFORMATIONS_HPP

#include "defcoh/algebra.hpp"
#include "defcoh/cochain.hpp"

#include <vector>

namespace defcoh {

struct DeformationReport {
    bool mc_verdict = false;     ///< d_pi pi' + 1/2 [pi',pi'] = 0
    bool direct_verdict = false; ///< pi + pi' satisfies the kind's identity
    Cochain defect;              ///< the Maurer-Cartan defect
    std::vector<Witness> witnesses;
};

/// Decides whether pi + pi' is again a structure of the same kind, both through
/// the Maurer-Cartan equation of the dgLa controlling pi and directly.
/// Throws std::logic_error if the two verdicts differ.
DeformationReport deformation_check(const Algebra& pi, const Cochain& pi_prime,
                                    std::size_t witness_cap = default_witness_cap);

} // namespace defcoh

#endif // DEFCOH_DEFORMATIONS_HPP
