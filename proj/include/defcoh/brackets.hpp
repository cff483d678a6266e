#ifndef DEFCOH_BRACKETS_HPP
#define DEFCOH_BRACKETS_HPP

#include "defcoh/algebra.hpp"
#include "defcoh/cochain.hpp"
#include "defcoh/representation.hpp"

namespace defcoh {

// Graded elements are cochains in graded_space(kind, p, dim): degree p means
// p+1 inputs (associative, lie, leibniz), p wedge inputs and one more
// (prelie), or p wedge pairs and one more (threelie).

/// The kind's composition P o Q, of degree p+q.
Cochain circ(const Cochain& P, const Cochain& Q);

/// [P,Q] = P o Q - (-1)^{pq} Q o P.
Cochain graded_bracket(const Cochain& P, const Cochain& Q);

struct McResult {
    bool holds = false;
    Cochain defect; ///< d x + 1/2 [x,x]
};

/// Maurer-Cartan equation in the graded Lie algebra: 1/2 [x,x] = 0.
McResult mc_check(const Cochain& x);

/// Maurer-Cartan equation in the dgLa with differential [base, .]:
/// [base, x] + 1/2 [x,x] = 0.
McResult mc_check(const Cochain& base, const Cochain& x);

/// d_pi f = [pi, f] for the structure cochain of a valid algebra.
Cochain induced_differential(const Algebra& pi, const Cochain& f);

/// Whether d f = (-1)^{n-1} [pi, f] for f in C^n(g;g), n >= 1, where d is the
/// coboundary of the regular (adjoint) representation.
bool coboundary_bracket_identity(const Algebra& a, const Cochain& f);

/// MC verdict of the bar action in the dgLa of g (+) V.
McResult representation_mc_check(const Representation& r);

/// A p-cochain of linear maps from tensor powers of g into h, for associative g, h.
struct MorphismCochain {
    Algebra source;
    Algebra target;
    Cochain map;

    int degree() const { return map.space().degree(); }
};

MorphismCochain morphism_cochain(const Algebra& source, const Algebra& target, Cochain map);

MorphismCochain cup_product(const MorphismCochain& P, const MorphismCochain& Q);
MorphismCochain morphism_differential(const MorphismCochain& P);

struct MorphismCheck {
    bool mc = false;     ///< d f + f cup f = 0
    bool direct = false; ///< f(x y) = f(x) f(y) on basis pairs
    Cochain defect;
};

/// f is a dim h x dim g matrix. Both routes are computed.
MorphismCheck morphism_mc_check(const Algebra& g, const Algebra& h, const Matrix& f);

} // namespace defcoh

#endif // DEFCOH_BRACKETS_HPP
