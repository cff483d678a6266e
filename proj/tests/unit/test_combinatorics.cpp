#include "defcoh/combinatorics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>

using namespace defcoh;

TEST(Shuffles, EmptyFirstBlockIsIdentity)
{
    const auto s = shuffles({0, 3});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].permutation, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(s[0].sign, 1);
    EXPECT_EQ(shuffles({3, 0}).size(), 1u);
}

TEST(Shuffles, OneTwo)
{
    const auto s = shuffles({1, 2});
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].permutation, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(s[1].permutation, (std::vector<int>{1, 0, 2}));
    EXPECT_EQ(s[2].permutation, (std::vector<int>{2, 0, 1}));
    EXPECT_EQ(s[0].sign, 1);
    EXPECT_EQ(s[1].sign, -1);
    EXPECT_EQ(s[2].sign, 1);
}

TEST(Shuffles, TwoTwo) { EXPECT_EQ(shuffles({2, 2}).size(), 6u); }

TEST(Shuffles, ThreeBlocks)
{
    // multinomial(4; 1,1,2) = 12
    const auto s = shuffles({1, 1, 2});
    EXPECT_EQ(s.size(), 12u);
    for (const auto& sh : s)
        EXPECT_LT(sh.permutation[2], sh.permutation[3]);
}

TEST(Shuffles, CountsAndSigns)
{
    for (int n = 0; n <= 7; ++n)
        for (int i = 0; i <= n; ++i) {
            const auto s = shuffles({i, n - i});
            EXPECT_EQ(static_cast<long long>(s.size()), binomial(n, i));
            for (const auto& sh : s) {
                EXPECT_TRUE(std::is_sorted(sh.permutation.begin(), sh.permutation.begin() + i));
                EXPECT_TRUE(std::is_sorted(sh.permutation.begin() + i, sh.permutation.end()));
                // parity by counting transpositions of a selection sort
                std::vector<int> p = sh.permutation;
                int swaps = 0;
                for (std::size_t a = 0; a < p.size(); ++a) {
                    const auto m = std::min_element(p.begin() + static_cast<std::ptrdiff_t>(a), p.end());
                    if (m != p.begin() + static_cast<std::ptrdiff_t>(a)) {
                        std::iter_swap(m, p.begin() + static_cast<std::ptrdiff_t>(a));
                        ++swaps;
                    }
                }
                EXPECT_EQ(sh.sign, swaps % 2 == 0 ? 1 : -1);
            }
            EXPECT_TRUE(std::is_sorted(s.begin(), s.end(), [](const Shuffle& a, const Shuffle& b) {
                return a.permutation < b.permutation;
            }));
        }
}

TEST(NormalizeWedge, Examples)
{
    const std::array<int, 2> a{1, 0};
    const auto na = normalize_wedge(a);
    ASSERT_TRUE(na);
    EXPECT_EQ(na->wedge.indices, (std::vector<int>{0, 1}));
    EXPECT_EQ(na->sign, -1);

    const std::array<int, 2> b{0, 0};
    EXPECT_FALSE(normalize_wedge(b));

    const std::array<int, 3> c{2, 0, 1};
    const auto nc = normalize_wedge(c);
    ASSERT_TRUE(nc);
    EXPECT_EQ(nc->wedge.indices, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(nc->sign, 1);
}

TEST(NormalizeWedge, IdempotentOnSorted)
{
    for (const auto& w : wedge_basis(5, 3)) {
        const auto n = normalize_wedge(w.indices);
        ASSERT_TRUE(n);
        EXPECT_EQ(n->wedge, w);
        EXPECT_EQ(n->sign, 1);
    }
}

TEST(WedgeBasis, RankMatchesPosition)
{
    for (int dim = 0; dim <= 5; ++dim)
        for (int k = 0; k <= dim + 1; ++k) {
            const auto basis = wedge_basis(dim, k);
            EXPECT_EQ(static_cast<long long>(basis.size()), binomial(dim, k));
            for (std::size_t i = 0; i < basis.size(); ++i)
                EXPECT_EQ(wedge_rank(basis[i].indices, dim), static_cast<Index>(i));
        }
}

TEST(Permutation, Sign)
{
    const std::array<int, 3> cycle{1, 2, 0};
    const std::array<int, 3> swap{1, 0, 2};
    EXPECT_EQ(permutation_sign(cycle), 1);
    EXPECT_EQ(permutation_sign(swap), -1);
}
