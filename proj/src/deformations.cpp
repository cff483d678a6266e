#include "defcoh/deformations.hpp"

#include "defcoh/brackets.hpp"

#include <stdexcept>

namespace defcoh {

DeformationReport deformation_check(const Algebra& pi, const Cochain& pi_prime, std::size_t witness_cap)
{
    if (!validate_structure(pi, 1).valid)
        throw InputError("the base structure is not a valid " + std::string(kind_name(pi.kind())) +
                         " algebra");
    const auto& space = pi_prime.space();
    if (!(space == graded_space(pi.kind(), 1, pi.dim())))
        throw InputError("the deformation direction must have the shape of a structure of the same kind");

    Algebra direction = pi;
    try {
        direction = algebra_from_cochain(pi_prime);
    } catch (const InputError& e) {
        throw InputError("the deformation direction is not a " + std::string(kind_name(pi.kind())) +
                         " operation: " + e.what());
    }

    McResult mc = mc_check(structure_cochain(pi), pi_prime);
    ValidationReport direct = validate_structure(pi + direction, witness_cap);
    if (mc.holds != direct.valid)
        throw std::logic_error("Maurer-Cartan and direct verdicts disagree");
    return DeformationReport{mc.holds, direct.valid, std::move(mc.defect), std::move(direct.witnesses)};
}

} // namespace defcoh
