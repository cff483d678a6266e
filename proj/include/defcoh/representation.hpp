#ifndef DEFCOH_REPRESENTATION_HPP
#define DEFCOH_REPRESENTATION_HPP

#include "defcoh/algebra.hpp"
#include "defcoh/cochain.hpp"

#include <string_view>
#include <vector>

namespace defcoh {

/// Action data of a representation (V; ...) of an algebra, one matrix per
/// basis element:
///   associative  first = L,     second = R
///   lie          first = rho
///   prelie       first = rho,   second = mu
///   leibniz      first = rho^L, second = rho^R
///   threelie     first = rho on the basis e_i^e_j (i<j) of the exterior square
class Representation {
public:
    Representation(Algebra algebra, int dim_v, std::vector<Matrix> first,
                   std::vector<Matrix> second = {});

    static Representation zero(const Algebra& algebra, int dim_v);

    AlgebraKind kind() const { return algebra_.kind(); }
    const Algebra& algebra() const { return algebra_; }
    int dim_v() const { return dim_v_; }

    const std::vector<Matrix>& first() const { return first_; }
    const std::vector<Matrix>& second() const { return second_; }

    /// Number of maps the kind carries (1 or 2).
    static int map_count(AlgebraKind kind);
    /// Number of matrices per map: dim g, or C(dim g, 2) for threelie.
    static int matrices_per_map(AlgebraKind kind, int dim_g);

    /// rho(e_i, e_j) for threelie with skew extension; zero when i == j.
    Matrix pair_action(int i, int j) const;

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    Algebra algebra_;
    int dim_v_;
    std::vector<Matrix> first_;
    std::vector<Matrix> second_;
};

/// JSON-facing names of the maps of each kind, in (first, second) order.
std::vector<std::string_view> map_names(AlgebraKind kind);

/// sum_i x_i maps[i].
Matrix combine(const std::vector<Matrix>& maps, const Vector& x);

/// Verifies every defining identity of the kind on all basis tuples.
ValidationReport check_representation(const Representation& r,
                                      std::size_t witness_cap = default_witness_cap);

/// Regular representation (associative, prelie, leibniz) or adjoint (lie, threelie).
Representation regular_or_adjoint(const Algebra& a);

/// Dual representation on V*, realized by transposed matrices on the dual basis.
Representation dual_representation(const Representation& r);

/// prelie -> representation of the sub-adjacent Lie algebra on Hom(g,V);
/// threelie -> representation of the fundamental-object Leibniz algebra on Hom(g,V).
/// Hom(g,V) has basis E_{a,b}: e_a -> v_b, ordered by (a, b).
Representation hom_coefficient_rep(const Representation& r);

/// Structure and action on g (+) V as degree-1 graded elements. Basis of the
/// sum: the basis of g followed by the basis of V.
struct SumAlgebraMC {
    Cochain barpi;
    Cochain barrho;
};

SumAlgebraMC rep_as_maurer_cartan(const Representation& r);

} // namespace defcoh

#endif // DEFCOH_REPRESENTATION_HPP
