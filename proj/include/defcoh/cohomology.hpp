#ifndef DEFCOH_COHOMOLOGY_HPP
#define DEFCOH_COHOMOLOGY_HPP

#include "defcoh/cochain.hpp"
#include "defcoh/linalg.hpp"
#include "defcoh/representation.hpp"

#include <vector>

namespace defcoh {

/// The cochain space C^n of the complex of `r`.
CochainSpace cochain_space(const Representation& r, int n);

/// d f for f in C^n(g;V), evaluated term by term.
Cochain coboundary(const Representation& r, const Cochain& f);

/// d_n : C^n -> C^{n+1}; column k is the coboundary of the k-th basis cochain.
Matrix coboundary_matrix(const Representation& r, int n);
SparseColumns coboundary_sparse(const Representation& r, int n);

struct CohomologyDegree {
    int n = 0;
    Index dim_c = 0;
    Index dim_z = 0;
    Index dim_b = 0;
    Index dim_h = 0;
};

struct CohomologyReport {
    AlgebraKind kind;
    std::vector<CohomologyDegree> degrees;
};

/// Top degree of a complex that vanishes above it (lie, prelie); 4 for the
/// tensor complexes.
int default_max_degree(AlgebraKind kind, int dim_g);

/// Dimensions of Z^n, B^n, H^n from the first degree of the complex up to
/// max_degree. Throws std::logic_error if some d_{n+1} d_n is nonzero.
CohomologyReport cohomology_dims(const Representation& r, int max_degree);

} // namespace defcoh

#endif // DEFCOH_COHOMOLOGY_HPP
