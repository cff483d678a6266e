#include "defcoh/brackets.hpp"

#include "defcoh/cohomology.hpp"
#include "defcoh/combinatorics.hpp"

#include <map>

namespace defcoh {

namespace {

using Args = std::vector<int>;

// out += coeff * P(args) with args[pos] running over the components of v.
void add_slot(const Cochain& P, Args& args, std::size_t pos, const Vector& v, const Rational& coeff,
              Vector& out)
{
    for (Index k = 0; k < v.size(); ++k) {
        if (is_zero(v(k)))
            continue;
        args[pos] = static_cast<int>(k);
        P.accumulate(args, coeff * v(k), out);
    }
}

void append(Args& out, const Args& x, const std::vector<int>& perm, std::size_t begin, std::size_t end)
{
    for (std::size_t i = begin; i < end; ++i)
        out.push_back(x[static_cast<std::size_t>(perm[i])]);
}

// Appends the wedge pairs with indices perm[begin..end) of x.
void append_pairs(Args& out, const Args& x, const std::vector<int>& perm, std::size_t begin,
                  std::size_t end)
{
    for (std::size_t i = begin; i < end; ++i) {
        const auto j = static_cast<std::size_t>(perm[i]);
        out.push_back(x[2 * j]);
        out.push_back(x[2 * j + 1]);
    }
}

// Shuffle lists are shared by every output tuple of one composition.
class ShuffleCache {
public:
    const std::vector<Shuffle>& operator()(std::initializer_list<int> parts)
    {
        std::vector<int> key(parts);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, shuffles(key)).first;
        return it->second;
    }

private:
    std::map<std::vector<int>, std::vector<Shuffle>> cache_;
};

Vector circ_value(AlgebraKind kind, const Cochain& P, int p, const Cochain& Q, int q, const Args& x,
                  ShuffleCache& shuffles)
{
    const int dim = P.space().dim_v();
    Vector out = zero_vector(dim);
    const auto up = static_cast<std::size_t>(p);
    const auto uq = static_cast<std::size_t>(q);

    switch (kind) {
    case AlgebraKind::associative:
        for (std::size_t i = 0; i <= up; ++i) {
            const Vector qv = Q.evaluate(Args(x.begin() + static_cast<std::ptrdiff_t>(i),
                                              x.begin() + static_cast<std::ptrdiff_t>(i + uq + 1)));
            Args pa(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
            pa.push_back(0);
            pa.insert(pa.end(), x.begin() + static_cast<std::ptrdiff_t>(i + uq + 1), x.end());
            add_slot(P, pa, i, qv, Rational(parity_sign(static_cast<long long>(i) * q)), out);
        }
        break;
    case AlgebraKind::lie:
        for (const auto& s : shuffles({q + 1, p})) {
            Args qa;
            append(qa, x, s.permutation, 0, uq + 1);
            Args pa{0};
            append(pa, x, s.permutation, uq + 1, up + uq + 1);
            add_slot(P, pa, 0, Q.evaluate(qa), Rational(s.sign), out);
        }
        break;
    case AlgebraKind::prelie: {
        const std::size_t n = up + uq;
        const int last = x[n];
        if (p >= 1) {
            for (const auto& s : shuffles({q, 1, p - 1})) {
                Args qa;
                append(qa, x, s.permutation, 0, uq + 1);
                Args pa{0};
                append(pa, x, s.permutation, uq + 1, n);
                pa.push_back(last);
                add_slot(P, pa, 0, Q.evaluate(qa), Rational(s.sign), out);
            }
        }
        const int outer = parity_sign(static_cast<long long>(p) * q);
        for (const auto& s : shuffles({p, q})) {
            Args qa;
            append(qa, x, s.permutation, up, n);
            qa.push_back(last);
            Args pa;
            append(pa, x, s.permutation, 0, up);
            pa.push_back(0);
            add_slot(P, pa, up, Q.evaluate(qa), Rational(outer * s.sign), out);
        }
        break;
    }
    case AlgebraKind::leibniz:
        for (std::size_t k = 1; k <= up + 1; ++k) {
            const int outer = parity_sign(static_cast<long long>(k - 1) * q);
            for (const auto& s : shuffles({static_cast<int>(k) - 1, q})) {
                Args qa;
                append(qa, x, s.permutation, k - 1, k + uq - 1);
                qa.push_back(x[k + uq - 1]);
                Args pa;
                append(pa, x, s.permutation, 0, k - 1);
                pa.push_back(0);
                pa.insert(pa.end(), x.begin() + static_cast<std::ptrdiff_t>(k + uq), x.end());
                add_slot(P, pa, k - 1, Q.evaluate(qa), Rational(outer * s.sign), out);
            }
        }
        break;
    case AlgebraKind::threelie: {
        const std::size_t n = up + uq;
        const int z = x[2 * n];
        for (std::size_t k = 1; k <= up; ++k) {
            const int outer = parity_sign(static_cast<long long>(k - 1) * q);
            const int xl = x[2 * (k + uq - 1)];
            const int yl = x[2 * (k + uq - 1) + 1];
            for (const auto& s : shuffles({static_cast<int>(k) - 1, q})) {
                Args qa;
                append_pairs(qa, x, s.permutation, k - 1, k + uq - 1);
                Args pa;
                append_pairs(pa, x, s.permutation, 0, k - 1);
                const std::size_t pos = pa.size();
                pa.push_back(0);
                pa.push_back(0);
                pa.insert(pa.end(), x.begin() + static_cast<std::ptrdiff_t>(2 * (k + uq)),
                          x.begin() + static_cast<std::ptrdiff_t>(2 * n));
                pa.push_back(z);
                const Rational coeff(outer * s.sign);

                // Q into the x-leg, then into the y-leg of the pair
                qa.push_back(xl);
                pa[pos + 1] = yl;
                add_slot(P, pa, pos, Q.evaluate(qa), coeff, out);
                qa.back() = yl;
                pa[pos] = xl;
                add_slot(P, pa, pos + 1, Q.evaluate(qa), coeff, out);
            }
        }
        const int outer = parity_sign(static_cast<long long>(p) * q);
        for (const auto& s : shuffles({p, q})) {
            Args qa;
            append_pairs(qa, x, s.permutation, up, n);
            qa.push_back(z);
            Args pa;
            append_pairs(pa, x, s.permutation, 0, up);
            pa.push_back(0);
            add_slot(P, pa, pa.size() - 1, Q.evaluate(qa), Rational(outer * s.sign), out);
        }
        break;
    }
    }
    return out;
}

void check_graded(const Cochain& P)
{
    if (P.space().dim_g() != P.space().dim_v())
        throw InputError("graded elements take values in the algebra itself");
}

void check_same_kind(const Cochain& P, const Cochain& Q)
{
    check_graded(P);
    check_graded(Q);
    if (P.space().kind() != Q.space().kind())
        throw InputError("graded elements of different kinds");
    if (P.space().dim_g() != Q.space().dim_g())
        throw InputError("graded elements on spaces of different dimensions");
}

} // namespace

Cochain circ(const Cochain& P, const Cochain& Q)
{
    check_same_kind(P, Q);
    const int p = P.graded_degree();
    const int q = Q.graded_degree();
    if (p < 0 || q < 0)
        throw InputError("graded elements have non-negative degree");
    const AlgebraKind kind = P.space().kind();
    const CochainSpace target = graded_space(kind, p + q, P.space().dim_g());
    ShuffleCache cache;
    return tabulate(target, [&](const Args& x) { return circ_value(kind, P, p, Q, q, x, cache); });
}

Cochain graded_bracket(const Cochain& P, const Cochain& Q)
{
    Cochain out = circ(P, Q);
    const Cochain back = circ(Q, P);
    if (parity_sign(static_cast<long long>(P.graded_degree()) * Q.graded_degree()) > 0)
        out -= back;
    else
        out += back;
    return out;
}

McResult mc_check(const Cochain& x)
{
    if (x.graded_degree() != 1)
        throw InputError("Maurer-Cartan elements have degree 1");
    Cochain defect = Rational(1, 2) * graded_bracket(x, x);
    const bool holds = defect.is_zero();
    return McResult{holds, std::move(defect)};
}

McResult mc_check(const Cochain& base, const Cochain& x)
{
    if (x.graded_degree() != 1 || base.graded_degree() != 1)
        throw InputError("Maurer-Cartan elements and structures have degree 1");
    Cochain defect = graded_bracket(base, x) + Rational(1, 2) * graded_bracket(x, x);
    const bool holds = defect.is_zero();
    return McResult{holds, std::move(defect)};
}

Cochain induced_differential(const Algebra& pi, const Cochain& f)
{
    if (!validate_structure(pi, 1).valid)
        throw InputError("the induced differential needs a valid structure");
    return graded_bracket(structure_cochain(pi), f);
}

bool coboundary_bracket_identity(const Algebra& a, const Cochain& f)
{
    const auto& space = f.space();
    if (space.kind() != a.kind() || space.dim_g() != a.dim() || space.dim_v() != a.dim())
        throw InputError("cochain does not match the algebra");
    const int n = space.degree();
    if (n < 1)
        throw InputError("the identity is stated for cochains of degree at least 1");
    const Cochain lhs = coboundary(regular_or_adjoint(a), f);
    const Cochain rhs = Rational(parity_sign(n - 1)) * graded_bracket(structure_cochain(a), f);
    return lhs == rhs;
}

McResult representation_mc_check(const Representation& r)
{
    const SumAlgebraMC sum = rep_as_maurer_cartan(r);
    return mc_check(sum.barpi, sum.barrho);
}

MorphismCochain morphism_cochain(const Algebra& source, const Algebra& target, Cochain map)
{
    if (source.kind() != AlgebraKind::associative || target.kind() != AlgebraKind::associative)
        throw InputError("morphism cochains connect associative algebras");
    const auto& space = map.space();
    if (space.kind() != AlgebraKind::associative || space.dim_g() != source.dim() ||
        space.dim_v() != target.dim())
        throw InputError("morphism cochain shape does not match its algebras");
    return MorphismCochain{source, target, std::move(map)};
}

MorphismCochain cup_product(const MorphismCochain& P, const MorphismCochain& Q)
{
    if (!(P.source == Q.source) || !(P.target == Q.target))
        throw InputError("cup product of cochains between different algebras");
    const int p = P.degree();
    const int q = Q.degree();
    const auto up = static_cast<std::ptrdiff_t>(p);
    const CochainSpace space(AlgebraKind::associative, p + q, P.source.dim(), P.target.dim());
    const Rational sign = parity_sign(static_cast<long long>(p) * q);
    Cochain map = tabulate(space, [&](const Args& x) {
        const Vector a = P.map.evaluate(Args(x.begin(), x.begin() + up));
        const Vector b = Q.map.evaluate(Args(x.begin() + up, x.end()));
        Vector out = P.target.apply(a, b);
        for (Index k = 0; k < out.size(); ++k)
            out(k) *= sign;
        return out;
    });
    return MorphismCochain{P.source, P.target, std::move(map)};
}

MorphismCochain morphism_differential(const MorphismCochain& P)
{
    const int p = P.degree();
    const Algebra& g = P.source;
    const CochainSpace space(AlgebraKind::associative, p + 1, g.dim(), P.target.dim());
    Cochain map = tabulate(space, [&](const Args& x) {
        Vector out = zero_vector(P.target.dim());
        for (std::size_t i = 1; i <= static_cast<std::size_t>(p); ++i) {
            Args args(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
            args.insert(args.end(), x.begin() + static_cast<std::ptrdiff_t>(i + 1), x.end());
            add_slot(P.map, args, i - 1, g.apply(x[i - 1], x[i]),
                     Rational(parity_sign(p + static_cast<long long>(i))), out);
        }
        return out;
    });
    return MorphismCochain{P.source, P.target, std::move(map)};
}

MorphismCheck morphism_mc_check(const Algebra& g, const Algebra& h, const Matrix& f)
{
    if (g.kind() != AlgebraKind::associative || h.kind() != AlgebraKind::associative)
        throw InputError("morphisms are checked between associative algebras");
    if (!validate_structure(g, 1).valid || !validate_structure(h, 1).valid)
        throw InputError("morphism check needs valid algebras");
    if (f.rows() != h.dim() || f.cols() != g.dim())
        throw InputError("linear map must be a dim(target) x dim(source) matrix");

    const CochainSpace space(AlgebraKind::associative, 1, g.dim(), h.dim());
    const MorphismCochain F =
        morphism_cochain(g, h, tabulate(space, [&](const Args& x) { return Vector(f.col(x[0])); }));
    Cochain defect = morphism_differential(F).map + cup_product(F, F).map;

    bool direct = true;
    for (int i = 0; i < g.dim() && direct; ++i)
        for (int j = 0; j < g.dim() && direct; ++j) {
            const Vector lhs = f * g.apply(i, j);
            const Vector rhs = h.apply(Vector(f.col(i)), Vector(f.col(j)));
            direct = lhs == rhs;
        }
    const bool mc = defect.is_zero();
    return MorphismCheck{mc, direct, std::move(defect)};
}

} // namespace defcoh
