#include "defcoh/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace defcoh {

long long binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

int permutation_sign(std::span<const int> permutation)
{
    int inversions = 0;
    for (std::size_t i = 0; i < permutation.size(); ++i)
        for (std::size_t j = i + 1; j < permutation.size(); ++j)
            if (permutation[i] > permutation[j])
                ++inversions;
    return parity_sign(inversions);
}

namespace {

// Fill blocks left to right: choose the current block as an increasing subset
// of the unused values (lexicographic), then recurse on the remaining blocks.
void enumerate_blocks(std::span<const int> parts, std::size_t block, std::vector<int>& available,
                      std::vector<int>& prefix, std::vector<Shuffle>& out)
{
    if (block == parts.size()) {
        Shuffle s;
        s.permutation = prefix;
        s.sign = permutation_sign(prefix);
        out.push_back(std::move(s));
        return;
    }
    const int size = parts[block];
    const int n = static_cast<int>(available.size());
    if (block + 1 == parts.size()) {
        // the last block takes whatever is left, already increasing
        const auto mark = prefix.size();
        prefix.insert(prefix.end(), available.begin(), available.end());
        enumerate_blocks(parts, block + 1, available, prefix, out);
        prefix.resize(mark);
        return;
    }

    std::vector<int> chosen(static_cast<std::size_t>(size));
    std::iota(chosen.begin(), chosen.end(), 0);
    while (true) {
        const auto mark = prefix.size();
        std::vector<int> rest;
        rest.reserve(available.size() - chosen.size());
        std::size_t c = 0;
        for (int i = 0; i < n; ++i) {
            if (c < chosen.size() && chosen[c] == i) {
                prefix.push_back(available[static_cast<std::size_t>(i)]);
                ++c;
            } else {
                rest.push_back(available[static_cast<std::size_t>(i)]);
            }
        }
        enumerate_blocks(parts, block + 1, rest, prefix, out);
        prefix.resize(mark);

        // next k-combination in lexicographic order
        int i = size - 1;
        while (i >= 0 && chosen[static_cast<std::size_t>(i)] == n - size + i)
            --i;
        if (i < 0)
            break;
        ++chosen[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

std::vector<Shuffle> shuffles(std::span<const int> parts)
{
    int n = 0;
    for (int p : parts) {
        if (p < 0)
            throw InputError("shuffle block sizes must be non-negative");
        n += p;
    }
    std::vector<int> available(static_cast<std::size_t>(n));
    std::iota(available.begin(), available.end(), 0);
    std::vector<int> prefix;
    std::vector<Shuffle> out;
    if (parts.empty()) {
        out.push_back(Shuffle{});
        return out;
    }
    enumerate_blocks(parts, 0, available, prefix, out);
    return out;
}

int sort_wedge(std::span<int> indices)
{
    int sign = 1;
    // insertion sort; blocks are tiny
    for (std::size_t i = 1; i < indices.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
            if (indices[j - 1] == indices[j])
                return 0;
            if (indices[j - 1] < indices[j])
                break;
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i - 1] == indices[i])
            return 0;
    return sign;
}

std::optional<SignedWedge> normalize_wedge(std::span<const int> indices)
{
    std::vector<int> sorted(indices.begin(), indices.end());
    const int sign = sort_wedge(sorted);
    if (sign == 0)
        return std::nullopt;
    return SignedWedge{WedgeIndex{std::move(sorted)}, sign};
}

Index wedge_rank(std::span<const int> sorted, int dim)
{
    const int k = static_cast<int>(sorted.size());
    Index rank = 0;
    int previous = -1;
    for (int t = 0; t < k; ++t) {
        for (int v = previous + 1; v < sorted[static_cast<std::size_t>(t)]; ++v)
            rank += binomial(dim - 1 - v, k - 1 - t);
        previous = sorted[static_cast<std::size_t>(t)];
    }
    return rank;
}

std::vector<WedgeIndex> wedge_basis(int dim, int k)
{
    std::vector<WedgeIndex> out;
    if (k < 0 || k > dim)
        return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        out.push_back(WedgeIndex{c});
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == dim - k + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace defcoh
