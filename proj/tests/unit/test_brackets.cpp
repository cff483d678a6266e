#include "defcoh/brackets.hpp"
#include "defcoh/cohomology.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace defcoh;
using namespace defcoh::gen;

namespace {

int max_graded_degree(AlgebraKind kind) { return kind == AlgebraKind::threelie ? 1 : 2; }

int test_dim(AlgebraKind kind) { return kind == AlgebraKind::threelie ? 3 : 2; }

Cochain random_element(AlgebraKind kind, int p, Rng& rng)
{
    return random_cochain(graded_space(kind, p, test_dim(kind)), rng, 1);
}

// Compact form of the Leibniz bracket: degree-p elements as maps g^{(x)p} -> gl(g).
Cochain compact_leibniz_bracket(const Cochain& P, const Cochain& Q)
{
    const int p = P.graded_degree();
    const int q = Q.graded_degree();
    const int d = P.space().dim_g();
    const int sign_pq = parity_sign(static_cast<long long>(p) * q);
    using Args = std::vector<int>;

    // sum_k (-1)^{(k-1)b} sum_sigma A(x_s.., B(x_s.., x_{k+b}), x_{k+b+1}.., z)
    auto insertion = [&](const Cochain& A, const Cochain& B, int a, int b, const Args& x) {
        Vector out = zero_vector(d);
        for (int k = 1; k <= a; ++k)
            for (const auto& sh : shuffles({k - 1, b})) {
                Args inner;
                for (int t = k - 1; t < k - 1 + b; ++t)
                    inner.push_back(x[static_cast<std::size_t>(sh.permutation[static_cast<std::size_t>(t)])]);
                inner.push_back(x[static_cast<std::size_t>(k + b - 1)]);
                const Vector v = B.evaluate(inner);
                for (int e = 0; e < d; ++e) {
                    if (is_zero(v(e)))
                        continue;
                    Args outer;
                    for (int t = 0; t < k - 1; ++t)
                        outer.push_back(x[static_cast<std::size_t>(sh.permutation[static_cast<std::size_t>(t)])]);
                    outer.push_back(e);
                    outer.insert(outer.end(), x.begin() + k + b, x.end());
                    out += Rational(sh.sign * parity_sign(static_cast<long long>(k - 1) * b)) * v(e) *
                           A.evaluate(outer);
                }
            }
        return out;
    };

    auto apply_at = [&](const Cochain& A, Args head, const Vector& z) {
        Vector out = zero_vector(d);
        for (int e = 0; e < d; ++e)
            if (!is_zero(z(e))) {
                Args args = head;
                args.push_back(e);
                out += z(e) * A.evaluate(args);
            }
        return out;
    };

    const CochainSpace space = graded_space(AlgebraKind::leibniz, p + q, d);
    return tabulate(space, [&](const Args& x) {
        Vector out = insertion(P, Q, p, q, x) - Rational(sign_pq) * insertion(Q, P, q, p, x);
        const int z = x.back();
        for (const auto& sh : shuffles({p, q})) {
            Args a, b;
            for (int t = 0; t < p; ++t)
                a.push_back(x[static_cast<std::size_t>(sh.permutation[static_cast<std::size_t>(t)])]);
            for (int t = p; t < p + q; ++t)
                b.push_back(x[static_cast<std::size_t>(sh.permutation[static_cast<std::size_t>(t)])]);
            Args bz = b, az = a;
            bz.push_back(z);
            az.push_back(z);
            const Vector commutator = apply_at(P, a, Q.evaluate(bz)) - apply_at(Q, b, P.evaluate(az));
            out += Rational(sign_pq * sh.sign) * commutator;
        }
        return out;
    });
}

} // namespace

TEST(Circ, LieDegreeOneFormula)
{
    Rng rng(31);
    const Cochain P = random_element(AlgebraKind::lie, 1, rng);
    const Cochain Q = random_element(AlgebraKind::lie, 1, rng);
    const Cochain c = circ(P, Q);
    for (const auto& x : c.space().domain_tuples()) {
        auto at = [&](int a, int b, int third) {
            const Vector q = Q.evaluate({x[a], x[b]});
            Vector out = zero_vector(2);
            for (int e = 0; e < 2; ++e)
                out += q(e) * P.evaluate({e, x[third]});
            return out;
        };
        EXPECT_EQ(c.evaluate(x), Vector(at(0, 1, 2) - at(0, 2, 1) + at(1, 2, 0)));
    }
}

TEST(Circ, DegreeMismatchRejected)
{
    Rng rng(32);
    EXPECT_THROW(circ(random_element(AlgebraKind::lie, 1, rng), random_element(AlgebraKind::leibniz, 1, rng)),
                 InputError);
}

TEST(Bracket, LieDifferentialOfIdentity)
{
    const Cochain pi = structure_cochain(aff1());
    const CochainSpace s0 = graded_space(AlgebraKind::lie, 0, 2);
    const Cochain id = tabulate(s0, [](const std::vector<int>& x) { return unit_vector(2, x[0]); });
    EXPECT_EQ(graded_bracket(pi, id), pi);
    EXPECT_EQ(induced_differential(aff1(), id), pi);
}

TEST(Bracket, GradedAntisymmetryAndJacobi)
{
    Rng rng(33);
    for (auto kind : all_kinds)
        for (int t = 0; t < 6; ++t) {
            std::uniform_int_distribution<int> deg(0, max_graded_degree(kind));
            const int p = deg(rng), q = deg(rng), r = deg(rng);
            const Cochain P = random_element(kind, p, rng);
            const Cochain Q = random_element(kind, q, rng);
            const Cochain R = random_element(kind, r, rng);
            EXPECT_EQ(graded_bracket(P, Q), Rational(-parity_sign(p * q)) * graded_bracket(Q, P));
            const Cochain jacobi = Rational(parity_sign(p * r)) * graded_bracket(P, graded_bracket(Q, R)) +
                                   Rational(parity_sign(q * p)) * graded_bracket(Q, graded_bracket(R, P)) +
                                   Rational(parity_sign(r * q)) * graded_bracket(R, graded_bracket(P, Q));
            EXPECT_TRUE(jacobi.is_zero()) << kind_name(kind) << " " << p << q << r;
        }
}

TEST(Bracket, LeibnizCompactFormula)
{
    Rng rng(34);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
            const Cochain P = random_element(AlgebraKind::leibniz, p, rng);
            const Cochain Q = random_element(AlgebraKind::leibniz, q, rng);
            EXPECT_EQ(compact_leibniz_bracket(P, Q), graded_bracket(P, Q)) << p << q;
        }
}

TEST(MaurerCartan, EquivalentToAxioms)
{
    Rng rng(35);
    for (auto kind : all_kinds) {
        for (const auto& a : known_algebras(kind))
            EXPECT_TRUE(mc_check(structure_cochain(a)).holds) << describe(a);
        for (int t = 0; t < 10; ++t) {
            const Algebra b = perturb(random_valid_algebra(kind, test_dim(kind), rng), rng);
            EXPECT_EQ(mc_check(structure_cochain(b)).holds, validate_structure(b).valid) << describe(b);
        }
    }
}

TEST(MaurerCartan, DefectIsHalfSelfBracket)
{
    const Algebra bad = make_algebra(AlgebraKind::associative, 2, {{{1, 1}, {{2, 1}}}, {{2, 1}, {{1, 1}}}});
    const Cochain x = structure_cochain(bad);
    const McResult r = mc_check(x);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.defect, Rational(1, 2) * graded_bracket(x, x));
    EXPECT_THROW(mc_check(Cochain::zero(graded_space(AlgebraKind::lie, 2, 2))), InputError);
}

TEST(Differential, SquaresToZero)
{
    Rng rng(36);
    for (auto kind : all_kinds)
        for (const auto& a : known_algebras(kind, test_dim(kind)))
            for (int p = 0; p <= max_graded_degree(kind) - (kind == AlgebraKind::threelie ? 0 : 1); ++p) {
                const Cochain f = random_element(kind, p, rng);
                EXPECT_TRUE(induced_differential(a, induced_differential(a, f)).is_zero()) << describe(a);
            }
}

TEST(Differential, MatchesCoboundary)
{
    for (const Algebra& a : {dual_numbers(), aff1(), aff1_prelie(), leibniz_nonlie(), threelie_e1()}) {
        const int top = a.kind() == AlgebraKind::threelie ? 2 : 3;
        for (int n = std::max(1, first_degree(a.kind())); n <= top; ++n) {
            const CochainSpace s = graded_space(a.kind(), n - 1, a.dim());
            for (Index k = 0; k < s.dimension(); ++k)
                ASSERT_TRUE(coboundary_bracket_identity(a, Cochain::basis(s, k))) << describe(a) << " n=" << n;
        }
    }
}

TEST(Representations, MaurerCartanOnSum)
{
    for (const Algebra& a : {dual_numbers(), aff1(), aff1_prelie(), leibniz_nonlie(), threelie_e1()}) {
        EXPECT_TRUE(representation_mc_check(regular_or_adjoint(a)).holds) << describe(a);
        EXPECT_TRUE(representation_mc_check(dual_representation(regular_or_adjoint(a))).holds) << describe(a);
    }
}

TEST(Cup, DifferentialAndProduct)
{
    const Algebra g = dual_numbers();
    Rng rng(37);
    const Matrix f = random_matrix(2, 2, rng, 2);
    const MorphismCheck check = morphism_mc_check(g, g, f);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Vector expected = f * g.apply(i, j) - g.apply(Vector(f.col(i)), Vector(f.col(j)));
            EXPECT_EQ(check.defect.evaluate({i, j}), expected);
        }
}

TEST(Cup, MorphismExamples)
{
    const Algebra g = dual_numbers();
    Matrix collapse = zero_matrix(2, 2);
    collapse(0, 0) = 1;
    collapse(0, 1) = 1;
    const MorphismCheck bad = morphism_mc_check(g, g, collapse);
    EXPECT_FALSE(bad.mc);
    EXPECT_FALSE(bad.direct);
    const MorphismCheck id = morphism_mc_check(g, g, Matrix::Identity(2, 2));
    EXPECT_TRUE(id.mc);
    EXPECT_TRUE(id.direct);
    EXPECT_TRUE(morphism_mc_check(g, g, zero_matrix(2, 2)).mc);
}

TEST(Cup, DifferentialGradedAlgebra)
{
    Rng rng(38);
    const Algebra g = dual_numbers();
    const Algebra h = known_algebras(AlgebraKind::associative, 2).back();
    auto element = [&](int p) {
        return morphism_cochain(g, h, random_cochain(CochainSpace(AlgebraKind::associative, p, 2, 2), rng, 1));
    };
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
            const auto P = element(p), Q = element(q);
            EXPECT_TRUE(morphism_differential(morphism_differential(P)).map.is_zero());
            const auto lhs = morphism_differential(cup_product(P, Q)).map;
            const auto rhs = cup_product(morphism_differential(P), Q).map +
                             Rational(parity_sign(p)) * cup_product(P, morphism_differential(Q)).map;
            EXPECT_EQ(lhs, rhs) << p << q;
            const auto R = element(1);
            EXPECT_EQ(cup_product(cup_product(P, Q), R).map, cup_product(P, cup_product(Q, R)).map);
        }
}
