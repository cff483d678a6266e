#ifndef DEFCOH_COMBINATORICS_HPP
#define DEFCOH_COMBINATORICS_HPP

#include "defcoh/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace defcoh {

/// A block shuffle. permutation[i] is the (0-based) image of position i, so
/// the blocks of the domain are read off as consecutive runs of positions.
struct Shuffle {
    std::vector<int> permutation;
    int sign = 1;
};

/// Strictly increasing tuple of 0-based basis positions; a basis element of
/// an exterior power.
struct WedgeIndex {
    std::vector<int> indices;

    friend bool operator==(const WedgeIndex&, const WedgeIndex&) = default;
};

struct SignedWedge {
    WedgeIndex wedge;
    int sign = 1;
};

long long binomial(int n, int k);

/// +1 or -1 by inversion count.
int permutation_sign(std::span<const int> permutation);

/// All (i_1,...,i_k)-shuffles: permutations increasing inside each block,
/// listed in lexicographic order of the permutation sequence.
std::vector<Shuffle> shuffles(std::span<const int> parts);

inline std::vector<Shuffle> shuffles(std::initializer_list<int> parts)
{
    return shuffles(std::span<const int>(parts.begin(), parts.size()));
}

/// Sorts `indices` in place and returns the sign of the sorting permutation,
/// or 0 when two entries coincide.
int sort_wedge(std::span<int> indices);

std::optional<SignedWedge> normalize_wedge(std::span<const int> indices);

/// Position of a sorted k-subset of {0..dim-1} in lexicographic order.
Index wedge_rank(std::span<const int> sorted, int dim);

/// All k-subsets of {0..dim-1} in lexicographic order.
std::vector<WedgeIndex> wedge_basis(int dim, int k);

} // namespace defcoh

#endif // DEFCOH_COMBINATORICS_HPP
