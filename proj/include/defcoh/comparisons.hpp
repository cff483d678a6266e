#ifndef DEFCOH_COMPARISONS_HPP
#define DEFCOH_COMPARISONS_HPP

#include "defcoh/cochain.hpp"
#include "defcoh/representation.hpp"

#include <vector>

namespace defcoh {

/// f in C^{n-1}_lie(g^c; Hom(g,V)) to C^n_prelie(g;V):
/// Phi(f)(x_1,...,x_{n-1}, y) = f(x_1,...,x_{n-1})(y).
Cochain phi_prelie(const Cochain& f, int dim_v);

/// f in C^n_3lie(g;V) to C^{n-1}_leibniz(wedge^2 g; Hom(g,V)):
/// Phi(f)(X_1,...,X_{n-1})(x) = f(X_1,...,X_{n-1}, x).
Cochain phi_threelie(const Cochain& f);

/// Graded threelie element of degree p on g to a graded leibniz element of
/// degree p on wedge^2 g:
/// Psi(P)(X_1,...,X_p, x^y) = P(X_1,...,X_p, x)^y + x^P(X_1,...,X_p, y).
Cochain psi(const Cochain& P);

struct ComparisonDegree {
    int n = 0;                   ///< degree on the prelie / threelie side
    bool square_commutes = false;
    bool phi_bijective = false;
    Index dim_h_source = 0;      ///< H^n of the prelie / threelie complex
    Index dim_h_target = 0;      ///< H^{n-1} of the lie / leibniz complex
};

struct ComparisonReport {
    AlgebraKind kind;
    std::vector<ComparisonDegree> degrees;

    bool holds() const;
};

/// Checks d Phi = Phi d on every basis cochain and compares cohomology
/// dimensions for n = 1..max_degree. r is a prelie or threelie representation.
ComparisonReport compare(const Representation& r, int max_degree);

} // namespace defcoh

#endif // DEFCOH_COMPARISONS_HPP
