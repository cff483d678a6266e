#ifndef DEFCOH_COCHAIN_HPP
#define DEFCOH_COCHAIN_HPP

#include "defcoh/algebra.hpp"
#include "defcoh/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace defcoh {

/// The space C^n_kind(g;V) of n-cochains.
///
/// Its domain is a sequence of wedge blocks:
///   associative, leibniz   n blocks of size 1
///   lie                    one block of size n
///   prelie                 a block of size n-1, then a block of size 1 (n >= 1)
///   threelie               n-1 blocks of size 2, then a block of size 1 (n >= 1)
/// Coordinates run over the canonical (increasing within each block) input
/// tuples in lexicographic order, with the output index innermost.
class CochainSpace {
public:
    CochainSpace(AlgebraKind kind, int degree, int dim_g, int dim_v);

    AlgebraKind kind() const { return kind_; }
    int degree() const { return degree_; }
    int dim_g() const { return dim_g_; }
    int dim_v() const { return dim_v_; }

    const std::vector<int>& blocks() const { return blocks_; }
    int arity() const { return arity_; }

    /// Number of canonical input tuples.
    Index domain_size() const { return domain_size_; }
    Index dimension() const { return domain_size_ * dim_v_; }

    /// Canonical input tuple number `k`, flattened.
    std::vector<int> domain_tuple(Index k) const;
    std::vector<std::vector<int>> domain_tuples() const;

    struct Slot {
        int sign;
        Index offset; ///< coordinate of the first output component
    };

    /// Skew-normalizes each wedge block. Empty when a block has a repeat.
    std::optional<Slot> locate(std::span<const int> args) const;

    /// The next space in the complex.
    CochainSpace next() const { return CochainSpace(kind_, degree_ + 1, dim_g_, dim_v_); }

    friend bool operator==(const CochainSpace&, const CochainSpace&) = default;

private:
    AlgebraKind kind_;
    int degree_;
    int dim_g_;
    int dim_v_;
    std::vector<int> blocks_;
    std::vector<Index> radix_;
    int arity_ = 0;
    Index domain_size_ = 1;
};

/// Lowest cochain degree of the kind's complex: 1 for prelie and threelie, else 0.
int first_degree(AlgebraKind kind);

/// Space of graded elements of degree p on a dim-dimensional space with
/// values in itself, i.e. C^{p+1}_kind(g;g).
inline CochainSpace graded_space(AlgebraKind kind, int p, int dim)
{
    return CochainSpace(kind, p + 1, dim, dim);
}

class Cochain {
public:
    Cochain(CochainSpace space, Vector coords);

    static Cochain zero(const CochainSpace& space);
    static Cochain basis(const CochainSpace& space, Index k);

    const CochainSpace& space() const { return space_; }
    const Vector& coords() const { return coords_; }
    Vector& coords() { return coords_; }

    /// Degree as an element of the graded Lie algebra (number of blocks minus
    /// one); only meaningful when dim_v == dim_g.
    int graded_degree() const { return space_.degree() - 1; }

    /// f(e_{args[0]}, ...), a vector in V.
    Vector evaluate(std::span<const int> args) const;
    Vector evaluate(std::initializer_list<int> args) const
    {
        return evaluate(std::span<const int>(args.begin(), args.size()));
    }

    /// out += coeff * f(e_{args[0]}, ...).
    void accumulate(std::span<const int> args, const Rational& coeff, Vector& out) const;

    bool is_zero() const { return all_zero(coords_); }

    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    Cochain& operator*=(const Rational& s);

    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    CochainSpace space_;
    Vector coords_;
};

Cochain operator+(Cochain a, const Cochain& b);
Cochain operator-(Cochain a, const Cochain& b);
Cochain operator*(const Rational& s, Cochain a);

inline const Vector& to_vector(const Cochain& f) { return f.coords(); }
Cochain from_vector(const CochainSpace& space, Vector v);

/// Builds a cochain by evaluating `value(tuple)` on every canonical input tuple.
template <typename F>
Cochain tabulate(const CochainSpace& space, F&& value)
{
    Vector coords(space.dimension());
    const int dv = space.dim_v();
    for (Index k = 0; k < space.domain_size(); ++k) {
        const Vector v = value(space.domain_tuple(k));
        coords.segment(k * dv, dv) = v;
    }
    return Cochain(space, std::move(coords));
}

/// The structure constants of `a` as a degree-1 graded element.
Cochain structure_cochain(const Algebra& a);

/// Inverse of structure_cochain. For threelie the cochain must be totally
/// skew in its three inputs.
Algebra algebra_from_cochain(const Cochain& c);

} // namespace defcoh

#endif // DEFCOH_COCHAIN_HPP
