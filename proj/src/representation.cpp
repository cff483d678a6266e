#include "defcoh/representation.hpp"

#include "defcoh/combinatorics.hpp"

#include <array>

namespace defcoh {

int Representation::map_count(AlgebraKind kind)
{
    return (kind == AlgebraKind::lie || kind == AlgebraKind::threelie) ? 1 : 2;
}

int Representation::matrices_per_map(AlgebraKind kind, int dim_g)
{
    return kind == AlgebraKind::threelie ? static_cast<int>(binomial(dim_g, 2)) : dim_g;
}

std::vector<std::string_view> map_names(AlgebraKind kind)
{
    switch (kind) {
    case AlgebraKind::associative: return {"L", "R"};
    case AlgebraKind::lie: return {"rho"};
    case AlgebraKind::prelie: return {"rho", "mu"};
    case AlgebraKind::leibniz: return {"rhoL", "rhoR"};
    case AlgebraKind::threelie: return {"rho"};
    }
    return {};
}

Representation::Representation(Algebra algebra, int dim_v, std::vector<Matrix> first,
                               std::vector<Matrix> second)
    : algebra_(std::move(algebra)), dim_v_(dim_v), first_(std::move(first)), second_(std::move(second))
{
    if (dim_v_ < 0)
        throw InputError("representation dimension must be non-negative");
    const int count = map_count(kind());
    const auto expected = static_cast<std::size_t>(matrices_per_map(kind(), algebra_.dim()));
    if (count == 1 && !second_.empty())
        throw InputError(std::string(kind_name(kind())) + " representations carry a single map");
    auto check = [&](const std::vector<Matrix>& maps, std::string_view name) {
        if (maps.size() != expected)
            throw InputError("map '" + std::string(name) + "' has " + std::to_string(maps.size()) +
                             " matrices, expected " + std::to_string(expected));
        for (const auto& m : maps)
            if (m.rows() != dim_v_ || m.cols() != dim_v_)
                throw InputError("map '" + std::string(name) + "' matrices must be dimV x dimV");
    };
    const auto names = map_names(kind());
    check(first_, names[0]);
    if (count == 2)
        check(second_, names[1]);
}

Representation Representation::zero(const Algebra& algebra, int dim_v)
{
    const auto n = static_cast<std::size_t>(matrices_per_map(algebra.kind(), algebra.dim()));
    std::vector<Matrix> maps(n, zero_matrix(dim_v, dim_v));
    if (map_count(algebra.kind()) == 1)
        return Representation(algebra, dim_v, maps);
    return Representation(algebra, dim_v, maps, maps);
}

Matrix Representation::pair_action(int i, int j) const
{
    std::array<int, 2> pair{i, j};
    const int sign = sort_wedge(pair);
    if (sign == 0)
        return zero_matrix(dim_v_, dim_v_);
    const Matrix& m = first_[static_cast<std::size_t>(wedge_rank(pair, algebra_.dim()))];
    return sign > 0 ? m : Matrix(-m);
}

Matrix combine(const std::vector<Matrix>& maps, const Vector& x)
{
    if (maps.empty())
        return Matrix();
    Matrix out = zero_matrix(maps.front().rows(), maps.front().cols());
    for (Index i = 0; i < x.size(); ++i)
        if (!is_zero(x(i)))
            out += x(i) * maps[static_cast<std::size_t>(i)];
    return out;
}

namespace {

Vector flatten(const Matrix& m)
{
    Vector v(m.size());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            v(i * m.cols() + j) = m(i, j);
    return v;
}

class Checker {
public:
    explicit Checker(std::size_t cap) : cap_(cap) {}

    void expect_zero(const Matrix& defect, std::vector<int> tuple, std::string_view identity)
    {
        if (all_zero(defect))
            return;
        report_.valid = false;
        if (report_.witnesses.size() < cap_)
            report_.witnesses.push_back(Witness{std::move(tuple), flatten(defect), std::string(identity)});
    }

    ValidationReport take() { return std::move(report_); }

private:
    std::size_t cap_;
    ValidationReport report_;
};

// rho(x, e_j) for a vector x, threelie only
Matrix pair_action_left(const Representation& r, const Vector& x, int j)
{
    Matrix out = zero_matrix(r.dim_v(), r.dim_v());
    for (Index k = 0; k < x.size(); ++k)
        if (!is_zero(x(k)))
            out += x(k) * r.pair_action(static_cast<int>(k), j);
    return out;
}

} // namespace

ValidationReport check_representation(const Representation& r, std::size_t witness_cap)
{
    const Algebra& g = r.algebra();
    const int d = g.dim();
    Checker check(witness_cap);
    auto at = [](const std::vector<Matrix>& maps, int i) -> const Matrix& {
        return maps[static_cast<std::size_t>(i)];
    };

    switch (r.kind()) {
    case AlgebraKind::associative:
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                const Vector xy = g.apply(x, y);
                const auto& L = r.first();
                const auto& R = r.second();
                check.expect_zero(combine(L, xy) - at(L, x) * at(L, y), {x, y}, "L_{xy} = L_x L_y");
                check.expect_zero(combine(R, xy) - at(R, y) * at(R, x), {x, y}, "R_{xy} = R_y R_x");
                check.expect_zero(at(L, x) * at(R, y) - at(R, y) * at(L, x), {x, y}, "L_x R_y = R_y L_x");
            }
        break;
    case AlgebraKind::lie:
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                const auto& rho = r.first();
                check.expect_zero(combine(rho, g.apply(x, y)) -
                                      (at(rho, x) * at(rho, y) - at(rho, y) * at(rho, x)),
                                  {x, y}, "rho([x,y]) = [rho(x),rho(y)]");
            }
        break;
    case AlgebraKind::prelie:
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                const auto& rho = r.first();
                const auto& mu = r.second();
                const Vector commutator = g.apply(x, y) - g.apply(y, x);
                check.expect_zero(combine(rho, commutator) -
                                      (at(rho, x) * at(rho, y) - at(rho, y) * at(rho, x)),
                                  {x, y}, "rho([x,y]_C) = [rho(x),rho(y)]");
                check.expect_zero(at(rho, x) * at(mu, y) - at(mu, y) * at(rho, x) -
                                      combine(mu, g.apply(x, y)) + at(mu, y) * at(mu, x),
                                  {x, y}, "rho(x)mu(y) - mu(y)rho(x) = mu(x.y) - mu(y)mu(x)");
            }
        break;
    case AlgebraKind::leibniz:
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                const auto& L = r.first();
                const auto& R = r.second();
                const Vector xy = g.apply(x, y);
                check.expect_zero(combine(L, xy) - (at(L, x) * at(L, y) - at(L, y) * at(L, x)), {x, y},
                                  "rhoL([x,y]) = [rhoL(x),rhoL(y)]");
                check.expect_zero(combine(R, xy) - (at(L, x) * at(R, y) - at(R, y) * at(L, x)), {x, y},
                                  "rhoR([x,y]) = [rhoL(x),rhoR(y)]");
                check.expect_zero(at(R, y) * at(L, x) + at(R, y) * at(R, x), {x, y},
                                  "rhoR(y)rhoL(x) = -rhoR(y)rhoR(x)");
            }
        break;
    case AlgebraKind::threelie:
        for (int x1 = 0; x1 < d; ++x1)
            for (int x2 = 0; x2 < d; ++x2)
                for (int x3 = 0; x3 < d; ++x3)
                    for (int x4 = 0; x4 < d; ++x4) {
                        auto rho = [&](int i, int j) { return r.pair_action(i, j); };
                        // rho(e_i, v) = -rho(v, e_i)
                        auto rho_right = [&](int i, const Vector& v) {
                            return Matrix(-pair_action_left(r, v, i));
                        };
                        check.expect_zero(rho(x1, x2) * rho(x3, x4) -
                                              pair_action_left(r, g.apply(x1, x2, x3), x4) -
                                              rho_right(x3, g.apply(x1, x2, x4)) -
                                              rho(x3, x4) * rho(x1, x2),
                                          {x1, x2, x3, x4}, "first representation identity");
                        check.expect_zero(rho_right(x1, g.apply(x2, x3, x4)) -
                                              rho(x3, x4) * rho(x1, x2) + rho(x2, x4) * rho(x1, x3) -
                                              rho(x2, x3) * rho(x1, x4),
                                          {x1, x2, x3, x4}, "second representation identity");
                    }
        break;
    }
    return check.take();
}

Representation regular_or_adjoint(const Algebra& a)
{
    if (!validate_structure(a, 1).valid)
        throw InputError("regular/adjoint representation requires a valid algebra");
    const int d = a.dim();

    if (a.kind() == AlgebraKind::threelie) {
        std::vector<Matrix> ad;
        for (const auto& pair : wedge_basis(d, 2)) {
            Matrix m(d, d);
            for (int z = 0; z < d; ++z) {
                const Vector v = a.apply(pair.indices[0], pair.indices[1], z);
                m.col(z) = v;
            }
            ad.push_back(std::move(m));
        }
        return Representation(a, d, std::move(ad));
    }

    std::vector<Matrix> left, right;
    for (int i = 0; i < d; ++i) {
        Matrix l(d, d), rm(d, d);
        for (int j = 0; j < d; ++j) {
            l.col(j) = a.apply(i, j);  // x -> e_i x
            rm.col(j) = a.apply(j, i); // x -> x e_i
        }
        left.push_back(std::move(l));
        right.push_back(std::move(rm));
    }
    if (a.kind() == AlgebraKind::lie)
        return Representation(a, d, std::move(left));
    return Representation(a, d, std::move(left), std::move(right));
}

Representation dual_representation(const Representation& r)
{
    if (!check_representation(r, 1).valid)
        throw InputError("dual representation requires a valid representation");

    auto transpose_all = [](const std::vector<Matrix>& maps, int sign) {
        std::vector<Matrix> out;
        out.reserve(maps.size());
        for (const auto& m : maps)
            out.push_back(sign > 0 ? Matrix(m.transpose()) : Matrix(-m.transpose()));
        return out;
    };
    const auto& A = r.first();
    const auto& B = r.second();

    switch (r.kind()) {
    case AlgebraKind::associative:
        // (V*; R*, L*) with <X* a, v> = <a, X v>
        return Representation(r.algebra(), r.dim_v(), transpose_all(B, 1), transpose_all(A, 1));
    case AlgebraKind::lie:
    case AlgebraKind::threelie:
        return Representation(r.algebra(), r.dim_v(), transpose_all(A, -1));
    case AlgebraKind::prelie: {
        // (V*; rho* - mu*, -mu*) with X* = -X^T
        std::vector<Matrix> rho, mu;
        for (std::size_t i = 0; i < A.size(); ++i) {
            rho.push_back(Matrix(-A[i].transpose() + B[i].transpose()));
            mu.push_back(Matrix(B[i].transpose()));
        }
        return Representation(r.algebra(), r.dim_v(), std::move(rho), std::move(mu));
    }
    case AlgebraKind::leibniz: {
        // (V*; (rhoL)*, -(rhoL)* - (rhoR)*) with X* = -X^T
        std::vector<Matrix> left, right;
        for (std::size_t i = 0; i < A.size(); ++i) {
            left.push_back(Matrix(-A[i].transpose()));
            right.push_back(Matrix(A[i].transpose() + B[i].transpose()));
        }
        return Representation(r.algebra(), r.dim_v(), std::move(left), std::move(right));
    }
    }
    throw InputError("unsupported kind");
}

Representation hom_coefficient_rep(const Representation& r)
{
    const Algebra& g = r.algebra();
    const int d = g.dim();
    const int dv = r.dim_v();
    const int dw = d * dv;
    auto idx = [dv](int a, int b) { return Index(a) * dv + b; };

    if (r.kind() == AlgebraKind::prelie) {
        // rho_hat(x)(f)(y) = rho(x) f(y) + mu(y) f(x) - f(x.y)
        std::vector<Matrix> maps;
        for (int x = 0; x < d; ++x) {
            Matrix m = zero_matrix(dw, dw);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < dv; ++b) {
                    const Index col = idx(a, b);
                    for (int c = 0; c < d; ++c) {
                        const Vector xc = g.apply(x, c);
                        for (int b2 = 0; b2 < dv; ++b2) {
                            Rational v = 0;
                            if (c == a)
                                v += r.first()[static_cast<std::size_t>(x)](b2, b);
                            if (x == a)
                                v += r.second()[static_cast<std::size_t>(c)](b2, b);
                            if (b2 == b)
                                v -= xc(a);
                            m(idx(c, b2), col) = v;
                        }
                    }
                }
            maps.push_back(std::move(m));
        }
        return Representation(subadjacent_lie(g), dw, std::move(maps));
    }

    if (r.kind() == AlgebraKind::threelie) {
        // rhoL(x^y)(f)z = rho(x,y) f(z) - f([x,y,z])
        // rhoR(x^y)(f)z = f([x,y,z]) - rho(x,y) f(z) - rho(y,z) f(x) - rho(z,x) f(y)
        std::vector<Matrix> left, right;
        for (const auto& pair : wedge_basis(d, 2)) {
            const int x = pair.indices[0], y = pair.indices[1];
            Matrix L = zero_matrix(dw, dw), R = zero_matrix(dw, dw);
            const Matrix rxy = r.pair_action(x, y);
            for (int c = 0; c < d; ++c) {
                const Vector xyz = g.apply(x, y, c);
                const Matrix ryz = r.pair_action(y, c);
                const Matrix rzx = r.pair_action(c, x);
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < dv; ++b) {
                        const Index col = idx(a, b);
                        for (int b2 = 0; b2 < dv; ++b2) {
                            Rational l = 0, rr = 0;
                            if (c == a) {
                                l += rxy(b2, b);
                                rr -= rxy(b2, b);
                            }
                            if (b2 == b) {
                                l -= xyz(a);
                                rr += xyz(a);
                            }
                            if (x == a)
                                rr -= ryz(b2, b);
                            if (y == a)
                                rr -= rzx(b2, b);
                            L(idx(c, b2), col) = l;
                            R(idx(c, b2), col) = rr;
                        }
                    }
            }
            left.push_back(std::move(L));
            right.push_back(std::move(R));
        }
        return Representation(fundamental_leibniz(g), dw, std::move(left), std::move(right));
    }
    throw InputError("hom_coefficient_rep expects a prelie or 3lie representation");
}

SumAlgebraMC rep_as_maurer_cartan(const Representation& r)
{
    const Algebra& g = r.algebra();
    if (!validate_structure(g, 1).valid)
        throw InputError("rep_as_maurer_cartan requires a valid algebra");
    const int d = g.dim();
    const int dv = r.dim_v();
    const int total = d + dv;
    const CochainSpace space = graded_space(r.kind(), 1, total);

    auto in_g = [d](int i) { return i < d; };
    // embed a V-vector into g (+) V
    auto from_v = [&](const Vector& v) {
        Vector out = zero_vector(total);
        out.tail(dv) = v;
        return out;
    };
    auto col = [](const std::vector<Matrix>& maps, int i, int j) -> Vector {
        return maps[static_cast<std::size_t>(i)].col(j);
    };

    Cochain barpi = tabulate(space, [&](const std::vector<int>& t) {
        Vector out = zero_vector(total);
        for (int i : t)
            if (!in_g(i))
                return out;
        out.head(d) = g.apply(t);
        return out;
    });

    Cochain barrho = tabulate(space, [&](const std::vector<int>& t) -> Vector {
        Vector zero = zero_vector(total);
        if (r.kind() == AlgebraKind::threelie) {
            // rho(x,y)w + rho(y,z)u + rho(z,x)v
            const int x = t[0], y = t[1], z = t[2];
            const int in_v = !in_g(x) + !in_g(y) + !in_g(z);
            if (in_v != 1)
                return zero;
            if (!in_g(z))
                return from_v(r.pair_action(x, y).col(z - d));
            if (!in_g(x))
                return from_v(r.pair_action(y, z).col(x - d));
            return from_v(r.pair_action(z, x).col(y - d));
        }
        const int x = t[0], y = t[1];
        if (in_g(x) == in_g(y))
            return zero;
        switch (r.kind()) {
        case AlgebraKind::lie:
            // rho(x)v - rho(y)u; canonical tuples put g before V
            return from_v(col(r.first(), x, y - d));
        case AlgebraKind::associative:
        case AlgebraKind::prelie:
        case AlgebraKind::leibniz:
            // first(x) v on (g, V), second(y) u on (V, g)
            if (in_g(x))
                return from_v(col(r.first(), x, y - d));
            return from_v(col(r.second(), y, x - d));
        case AlgebraKind::threelie:
            break;
        }
        return zero;
    });

    return SumAlgebraMC{std::move(barpi), std::move(barrho)};
}

} // namespace defcoh
