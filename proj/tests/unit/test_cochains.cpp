#include "defcoh/cochain.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace defcoh;
using namespace defcoh::gen;

TEST(CochainSpace, Dimensions)
{
    EXPECT_EQ(CochainSpace(AlgebraKind::associative, 2, 3, 2).dimension(), 18);
    EXPECT_EQ(CochainSpace(AlgebraKind::lie, 2, 3, 1).dimension(), 3);
    EXPECT_EQ(CochainSpace(AlgebraKind::lie, 4, 3, 1).dimension(), 0);
    EXPECT_EQ(CochainSpace(AlgebraKind::prelie, 3, 3, 1).dimension(), 9);
    EXPECT_EQ(CochainSpace(AlgebraKind::leibniz, 0, 2, 3).dimension(), 3);
    EXPECT_EQ(CochainSpace(AlgebraKind::threelie, 2, 4, 1).dimension(), 24);
    EXPECT_EQ(CochainSpace(AlgebraKind::threelie, 1, 4, 1).dimension(), 4);
    EXPECT_EQ(first_degree(AlgebraKind::prelie), 1);
    EXPECT_EQ(first_degree(AlgebraKind::lie), 0);
}

TEST(CochainSpace, LocateSkewSlots)
{
    const CochainSpace s(AlgebraKind::lie, 2, 3, 1);
    const std::array<int, 2> fwd{0, 2}, back{2, 0}, same{1, 1};
    const auto a = s.locate(fwd), b = s.locate(back);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->offset, b->offset);
    EXPECT_EQ(a->sign, -b->sign);
    EXPECT_FALSE(s.locate(same));
}

TEST(CochainSpace, TuplesRoundTrip)
{
    for (const CochainSpace& s : {CochainSpace(AlgebraKind::threelie, 3, 4, 2), CochainSpace(AlgebraKind::prelie, 3, 3, 1),
                                  CochainSpace(AlgebraKind::associative, 2, 2, 2)})
        for (Index k = 0; k < s.domain_size(); ++k) {
            const auto slot = s.locate(s.domain_tuple(k));
            ASSERT_TRUE(slot);
            EXPECT_EQ(slot->offset, k * s.dim_v());
            EXPECT_EQ(slot->sign, 1);
        }
}

TEST(Cochain, EvaluateIsSkewForLie)
{
    Rng rng(3);
    const CochainSpace s(AlgebraKind::lie, 3, 3, 2);
    const Cochain f = random_cochain(s, rng);
    EXPECT_EQ(f.evaluate({0, 1, 2}), Vector(-f.evaluate({1, 0, 2})));
    EXPECT_EQ(f.evaluate({0, 1, 2}), f.evaluate({1, 2, 0}));
    EXPECT_TRUE(all_zero(f.evaluate({0, 2, 0})));
}

TEST(Cochain, VectorRoundTrip)
{
    Rng rng(5);
    for (auto kind : all_kinds) {
        const CochainSpace s(kind, 2, 3, 2);
        const Cochain f = random_cochain(s, rng);
        EXPECT_EQ(from_vector(s, to_vector(f)), f);
    }
    EXPECT_THROW(from_vector(CochainSpace(AlgebraKind::lie, 2, 3, 1), zero_vector(4)), InputError);
}

TEST(Cochain, StructureRoundTrip)
{
    for (auto kind : all_kinds)
        for (const auto& a : known_algebras(kind)) {
            const Cochain c = structure_cochain(a);
            EXPECT_EQ(c.graded_degree(), 1);
            EXPECT_EQ(algebra_from_cochain(c), a);
        }
}

TEST(Cochain, Arithmetic)
{
    Rng rng(6);
    const CochainSpace s(AlgebraKind::leibniz, 2, 2, 2);
    const Cochain f = random_cochain(s, rng), g = random_cochain(s, rng);
    EXPECT_EQ((f + g) - g, f);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(Rational(2) * f, f + f);
    EXPECT_THROW(f + Cochain::zero(CochainSpace(AlgebraKind::leibniz, 2, 2, 1)), InputError);
}
