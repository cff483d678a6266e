#include "defcoh/deformations.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace defcoh;
using namespace defcoh::gen;

TEST(Deformation, AbelianToAff1)
{
    const DeformationReport r = deformation_check(abelian(2), structure_cochain(aff1()));
    EXPECT_TRUE(r.mc_verdict);
    EXPECT_TRUE(r.direct_verdict);
    EXPECT_TRUE(r.defect.is_zero());
    EXPECT_TRUE(r.witnesses.empty());
}

TEST(Deformation, DualNumbersDirectionsAgree)
{
    const Algebra base = dual_numbers();
    const Algebra first = make_algebra(AlgebraKind::associative, 2, {{{2, 2}, {{2, 1}}}});
    const Algebra second = make_algebra(AlgebraKind::associative, 2, {{{2, 2}, {{1, 1}, {2, 1}}}});
    for (const Algebra& dir : {first, second}) {
        const DeformationReport r = deformation_check(base, structure_cochain(dir));
        EXPECT_EQ(r.mc_verdict, r.direct_verdict);
        EXPECT_EQ(r.mc_verdict, validate_structure(base + dir).valid);
        EXPECT_EQ(r.witnesses.empty(), r.direct_verdict);
    }
}

TEST(Deformation, RandomDirectionsAgree)
{
    Rng rng(51);
    for (auto kind : all_kinds) {
        int positives = 0, negatives = 0;
        for (int t = 0; t < 12; ++t) {
            const int dim = kind == AlgebraKind::threelie ? 4 : 3;
            const Algebra base = random_valid_algebra(kind, dim, rng);
            Cochain dir = structure_cochain(base);
            switch (t % 3) {
            case 0:
                dir = structure_cochain(random_valid_algebra(kind, dim, rng)) - structure_cochain(base);
                break;
            case 1:
                dir = Rational(t) * dir;
                break;
            default:
                dir = structure_cochain(random_operation(kind, dim, rng));
            }
            const DeformationReport r = deformation_check(base, dir);
            EXPECT_EQ(r.mc_verdict, r.direct_verdict) << describe(base);
            (r.mc_verdict ? positives : negatives)++;
        }
        EXPECT_GT(positives, 0);
        EXPECT_GT(negatives, 0) << kind_name(kind);
    }
}

TEST(Deformation, ShapeChecked)
{
    EXPECT_THROW(deformation_check(abelian(2), structure_cochain(abelian(3))), InputError);
    EXPECT_THROW(deformation_check(abelian(2), structure_cochain(dual_numbers())), InputError);
    const Algebra bad = make_algebra(AlgebraKind::associative, 2, {{{1, 1}, {{2, 1}}}, {{2, 1}, {{1, 1}}}});
    EXPECT_THROW(deformation_check(bad, structure_cochain(dual_numbers())), InputError);
}
