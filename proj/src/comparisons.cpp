#include "defcoh/comparisons.hpp"

#include "defcoh/cohomology.hpp"
#include "defcoh/combinatorics.hpp"
#include "defcoh/linalg.hpp"

#include <array>

namespace defcoh {

namespace {

using Args = std::vector<int>;

int pair_count(int dim) { return static_cast<int>(binomial(dim, 2)); }

} // namespace

Cochain phi_prelie(const Cochain& f, int dim_v)
{
    const auto& src = f.space();
    if (src.kind() != AlgebraKind::lie || dim_v < 0 || src.dim_v() != src.dim_g() * dim_v)
        throw InputError("phi_prelie expects a lie cochain with values in Hom(g,V)");
    const CochainSpace target(AlgebraKind::prelie, src.degree() + 1, src.dim_g(), dim_v);
    return tabulate(target, [&](const Args& t) {
        const Vector hom = f.evaluate(Args(t.begin(), t.end() - 1));
        return Vector(hom.segment(Index(t.back()) * dim_v, dim_v));
    });
}

Cochain phi_threelie(const Cochain& f)
{
    const auto& src = f.space();
    if (src.kind() != AlgebraKind::threelie)
        throw InputError("phi_threelie expects a 3lie cochain");
    const int d = src.dim_g();
    const int dv = src.dim_v();
    const auto basis = wedge_basis(d, 2);
    const CochainSpace target(AlgebraKind::leibniz, src.degree() - 1, pair_count(d), d * dv);
    return tabulate(target, [&](const Args& t) {
        Args args;
        for (int k : t) {
            const auto& pair = basis[static_cast<std::size_t>(k)].indices;
            args.insert(args.end(), pair.begin(), pair.end());
        }
        args.push_back(0);
        Vector out(Index(d) * dv);
        for (int x = 0; x < d; ++x) {
            args.back() = x;
            out.segment(Index(x) * dv, dv) = f.evaluate(args);
        }
        return out;
    });
}

Cochain psi(const Cochain& P)
{
    const auto& src = P.space();
    if (src.kind() != AlgebraKind::threelie || src.dim_g() != src.dim_v())
        throw InputError("psi expects a graded 3lie element");
    const int d = src.dim_g();
    const int p = P.graded_degree();
    const auto basis = wedge_basis(d, 2);
    const CochainSpace target = graded_space(AlgebraKind::leibniz, p, pair_count(d));

    // coefficient of e_a^e_b in the pair basis
    auto add_wedge = [&](Vector& out, int a, int b, const Rational& c) {
        std::array<int, 2> pair{a, b};
        const int sign = sort_wedge(pair);
        if (sign == 0)
            return;
        const Index k = wedge_rank(pair, d);
        out(k) += sign > 0 ? c : Rational(-c);
    };

    return tabulate(target, [&](const Args& t) {
        Args args;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            const auto& pair = basis[static_cast<std::size_t>(t[i])].indices;
            args.insert(args.end(), pair.begin(), pair.end());
        }
        const auto& last = basis[static_cast<std::size_t>(t.back())].indices;
        const int x = last[0], y = last[1];
        Vector out = zero_vector(target.dim_v());
        args.push_back(x);
        const Vector px = P.evaluate(args);
        args.back() = y;
        const Vector py = P.evaluate(args);
        for (int k = 0; k < d; ++k) {
            if (!is_zero(px(k)))
                add_wedge(out, k, y, px(k));
            if (!is_zero(py(k)))
                add_wedge(out, x, k, py(k));
        }
        return out;
    });
}

bool ComparisonReport::holds() const
{
    for (const auto& d : degrees)
        if (!d.square_commutes || !d.phi_bijective || d.dim_h_source != d.dim_h_target)
            return false;
    return true;
}

ComparisonReport compare(const Representation& r, int max_degree)
{
    const AlgebraKind kind = r.kind();
    if (kind != AlgebraKind::prelie && kind != AlgebraKind::threelie)
        throw InputError("comparison maps exist for prelie and 3lie representations");
    if (max_degree < 1)
        throw InputError("comparison starts at degree 1");

    const Representation hat = hom_coefficient_rep(r);
    const CohomologyReport source = cohomology_dims(r, max_degree);
    const CohomologyReport target = cohomology_dims(hat, max_degree - 1);

    // The lie/leibniz side is the domain of Phi for prelie and its codomain for threelie.
    auto phi = [&](const Cochain& f) {
        return kind == AlgebraKind::prelie ? phi_prelie(f, r.dim_v()) : phi_threelie(f);
    };

    ComparisonReport report{kind, {}};
    for (int n = 1; n <= max_degree; ++n) {
        const CochainSpace domain =
            kind == AlgebraKind::prelie ? cochain_space(hat, n - 1) : cochain_space(r, n);
        const Representation& domain_rep = kind == AlgebraKind::prelie ? hat : r;
        const Representation& codomain_rep = kind == AlgebraKind::prelie ? r : hat;

        ComparisonDegree degree;
        degree.n = n;
        degree.square_commutes = true;
        std::vector<Vector> images;
        for (Index k = 0; k < domain.dimension(); ++k) {
            const Cochain f = Cochain::basis(domain, k);
            const Cochain image = phi(f);
            if (degree.square_commutes)
                degree.square_commutes = coboundary(codomain_rep, image) == phi(coboundary(domain_rep, f));
            images.push_back(image.coords());
        }
        const Index codim = kind == AlgebraKind::prelie ? cochain_space(r, n).dimension()
                                                        : cochain_space(hat, n - 1).dimension();
        Matrix m = zero_matrix(codim, domain.dimension());
        for (std::size_t k = 0; k < images.size(); ++k)
            m.col(static_cast<Index>(k)) = images[k];
        degree.phi_bijective = codim == domain.dimension() && rank(m) == codim;

        degree.dim_h_source = source.degrees[static_cast<std::size_t>(n - 1)].dim_h;
        degree.dim_h_target = target.degrees[static_cast<std::size_t>(n - 1)].dim_h;
        report.degrees.push_back(degree);
    }
    return report;
}

} // namespace defcoh
