#ifndef DEFCOH_ALGEBRA_HPP
#define DEFCOH_ALGEBRA_HPP

#include "defcoh/scalar.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace defcoh {

enum class AlgebraKind { associative, lie, prelie, leibniz, threelie };

inline constexpr AlgebraKind all_kinds[] = {AlgebraKind::associative, AlgebraKind::lie,
                                            AlgebraKind::prelie, AlgebraKind::leibniz,
                                            AlgebraKind::threelie};

/// "associative", "lie", "prelie", "leibniz", "3lie".
std::string_view kind_name(AlgebraKind kind);
AlgebraKind parse_kind(std::string_view name);

/// Number of inputs of the defining operation: 3 for threelie, 2 otherwise.
inline int structure_arity(AlgebraKind kind) { return kind == AlgebraKind::threelie ? 3 : 2; }

/// Whether the defining operation is stored skew (lie, threelie).
inline bool is_skew_kind(AlgebraKind kind)
{
    return kind == AlgebraKind::lie || kind == AlgebraKind::threelie;
}

/// One structure constant row: e_{in[0]} o e_{in[1]} (o e_{in[2]}) = sum_k out[k] e_k.
struct StructureEntry {
    std::vector<int> in;
    Vector out;
};

/// Finite-dimensional algebra given by a dense structure-constant tensor
/// c[i,j,k] (c[i,j,k,l] for threelie), output index innermost.
///
/// Skew symmetry is enforced at construction for lie and threelie; no other
/// axiom is implied by the type.
class Algebra {
public:
    Algebra(AlgebraKind kind, int dim, std::vector<Rational> constants);

    static Algebra zero(AlgebraKind kind, int dim);

    /// Builds from sparse entries. For skew kinds only strictly increasing
    /// input tuples are accepted and the rest is filled by skew symmetry;
    /// repeated tuples accumulate.
    static Algebra from_entries(AlgebraKind kind, int dim, std::span<const StructureEntry> entries);

    AlgebraKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int arity() const { return structure_arity(kind_); }
    const std::vector<Rational>& constants() const { return constants_; }

    const Rational& constant(std::span<const int> in, int out) const
    {
        return constants_[static_cast<std::size_t>(offset(in)) + static_cast<std::size_t>(out)];
    }

    /// The product (or bracket) of basis elements as a coordinate vector.
    Vector apply(std::span<const int> in) const;
    Vector apply(int i, int j) const { return apply(std::initializer_list<int>{i, j}); }
    Vector apply(int i, int j, int k) const { return apply(std::initializer_list<int>{i, j, k}); }
    Vector apply(std::initializer_list<int> in) const
    {
        return apply(std::span<const int>(in.begin(), in.size()));
    }

    /// Multilinear extension to arbitrary coordinate vectors.
    Vector apply(const Vector& x, const Vector& y) const;
    Vector apply(const Vector& x, const Vector& y, const Vector& z) const;

    /// Nonzero entries; canonical (increasing) input tuples only for skew kinds.
    std::vector<StructureEntry> entries() const;

    Algebra with_kind(AlgebraKind kind) const;

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    Index offset(std::span<const int> in) const
    {
        Index pos = 0;
        for (int i : in)
            pos = pos * dim_ + i;
        return pos * dim_;
    }

    AlgebraKind kind_;
    int dim_;
    std::vector<Rational> constants_;
};

Algebra operator+(const Algebra& a, const Algebra& b);
Algebra operator*(const Rational& s, const Algebra& a);

struct Witness {
    std::vector<int> tuple; ///< 0-based basis positions
    Vector defect;          ///< matrix defects are flattened row-major
    std::string identity;   ///< which identity failed, when a kind has several
};

struct ValidationReport {
    bool valid = true;
    std::vector<Witness> witnesses;
};

inline constexpr std::size_t default_witness_cap = 16;

/// Checks the kind's defining identity on all basis tuples (5-tuples for threelie).
ValidationReport validate_structure(const Algebra& a, std::size_t witness_cap = default_witness_cap);

/// [x,y]_C = x.y - y.x of a pre-Lie product.
Algebra subadjacent_lie(const Algebra& a);

/// The Leibniz bracket on fundamental objects, on the basis e_i^e_j (i<j) of
/// the exterior square, ordered lexicographically.
Algebra fundamental_leibniz(const Algebra& a);

} // namespace defcoh

#endif // DEFCOH_ALGEBRA_HPP
