#include "defcoh/cohomology.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace defcoh {

namespace {

// Structure constants and actions tabulated once per representation.
class Context {
public:
    explicit Context(const Representation& r) : r_(r), d_(r.algebra().dim())
    {
        const Algebra& g = r.algebra();
        if (g.kind() == AlgebraKind::threelie) {
            for (int i = 0; i < d_; ++i)
                for (int j = 0; j < d_; ++j) {
                    pairs_.push_back(r.pair_action(i, j));
                    for (int k = 0; k < d_; ++k)
                        products_.push_back(g.apply(i, j, k));
                }
        } else {
            for (int i = 0; i < d_; ++i)
                for (int j = 0; j < d_; ++j)
                    products_.push_back(g.apply(i, j));
        }
    }

    const Vector& mul(int i, int j) const { return products_[static_cast<std::size_t>(i * d_ + j)]; }
    const Vector& tri(int i, int j, int k) const
    {
        return products_[static_cast<std::size_t>((i * d_ + j) * d_ + k)];
    }
    const Matrix& pair(int i, int j) const { return pairs_[static_cast<std::size_t>(i * d_ + j)]; }
    const Matrix& first(int i) const { return r_.first()[static_cast<std::size_t>(i)]; }
    const Matrix& second(int i) const { return r_.second()[static_cast<std::size_t>(i)]; }
    AlgebraKind kind() const { return r_.kind(); }

private:
    const Representation& r_;
    int d_;
    std::vector<Vector> products_;
    std::vector<Matrix> pairs_;
};

using Args = std::vector<int>;

// emit(coeff, args, action) stands for the term coeff * action f(args);
// a null action is the identity.
template <typename Emit>
void emit_slot(Emit& emit, const Rational& coeff, Args& args, std::size_t pos, const Vector& v,
               const Matrix* action = nullptr)
{
    for (Index k = 0; k < v.size(); ++k) {
        if (is_zero(v(k)))
            continue;
        args[pos] = static_cast<int>(k);
        emit(coeff * v(k), args, action);
    }
}

Args without(const Args& x, std::size_t begin, std::size_t end, std::initializer_list<std::size_t> skip)
{
    Args out;
    for (std::size_t i = begin; i < end; ++i)
        if (std::find(skip.begin(), skip.end(), i) == skip.end())
            out.push_back(x[i]);
    return out;
}

// Terms of (d f)(x) for f of degree n.
template <typename Emit>
void coboundary_terms(const Context& c, const Args& x, int n, Emit& emit)
{
    const auto un = static_cast<std::size_t>(n);
    switch (c.kind()) {
    case AlgebraKind::associative: {
        emit(Rational(1), Args(x.begin() + 1, x.end()), &c.first(x[0]));
        for (std::size_t i = 1; i <= un; ++i) {
            Args args = without(x, 0, x.size(), {i});
            emit_slot(emit, Rational(parity_sign(static_cast<long long>(i))), args, i - 1,
                      c.mul(x[i - 1], x[i]));
        }
        emit(Rational(parity_sign(n + 1)), Args(x.begin(), x.end() - 1), &c.second(x[un]));
        break;
    }
    case AlgebraKind::lie: {
        for (std::size_t i = 0; i <= un; ++i)
            emit(Rational(parity_sign(static_cast<long long>(i))), without(x, 0, x.size(), {i}),
                 &c.first(x[i]));
        for (std::size_t i = 0; i <= un; ++i)
            for (std::size_t j = i + 1; j <= un; ++j) {
                Args args{0};
                const Args rest = without(x, 0, x.size(), {i, j});
                args.insert(args.end(), rest.begin(), rest.end());
                emit_slot(emit, Rational(parity_sign(static_cast<long long>(i + j))), args, 0,
                          c.mul(x[i], x[j]));
            }
        break;
    }
    case AlgebraKind::prelie: {
        const int last = x[un];
        for (std::size_t i = 0; i < un; ++i) {
            const Rational s = parity_sign(static_cast<long long>(i));
            Args args = without(x, 0, un, {i});
            args.push_back(last);
            emit(s, args, &c.first(x[i]));
            args.back() = x[i];
            emit(s, args, &c.second(last));
            emit_slot(emit, -s, args, args.size() - 1, c.mul(x[i], last));
        }
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i + 1; j < un; ++j) {
                Args args{0};
                const Args rest = without(x, 0, un, {i, j});
                args.insert(args.end(), rest.begin(), rest.end());
                args.push_back(last);
                emit_slot(emit, Rational(parity_sign(static_cast<long long>(i + j))), args, 0,
                          Vector(c.mul(x[i], x[j]) - c.mul(x[j], x[i])));
            }
        break;
    }
    case AlgebraKind::leibniz: {
        for (std::size_t i = 0; i < un; ++i)
            emit(Rational(parity_sign(static_cast<long long>(i))), without(x, 0, x.size(), {i}),
                 &c.first(x[i]));
        emit(Rational(parity_sign(n + 1)), Args(x.begin(), x.end() - 1), &c.second(x[un]));
        for (std::size_t i = 0; i <= un; ++i)
            for (std::size_t j = i + 1; j <= un; ++j) {
                Args args = without(x, 0, x.size(), {i});
                emit_slot(emit, Rational(-parity_sign(static_cast<long long>(i))), args, j - 1,
                          c.mul(x[i], x[j]));
            }
        break;
    }
    case AlgebraKind::threelie: {
        // x = (x_0, y_0, ..., x_{n-1}, y_{n-1}, z)
        const int z = x[2 * un];
        auto pairs_without = [&](std::size_t j) {
            return without(x, 0, 2 * un, {2 * j, 2 * j + 1});
        };
        for (std::size_t j = 0; j < un; ++j) {
            const int xj = x[2 * j], yj = x[2 * j + 1];
            const Rational s = parity_sign(static_cast<long long>(j));
            for (std::size_t k = j + 1; k < un; ++k) {
                const int xk = x[2 * k], yk = x[2 * k + 1];
                Args args = pairs_without(j);
                args.push_back(z);
                // pair k now sits at position k-1
                const std::size_t at = 2 * (k - 1);
                emit_slot(emit, -s, args, at, c.tri(xj, yj, xk));
                args[at] = xk;
                emit_slot(emit, -s, args, at + 1, c.tri(xj, yj, yk));
            }
            Args args = pairs_without(j);
            args.push_back(0);
            emit_slot(emit, -s, args, args.size() - 1, c.tri(xj, yj, z));
            if (xj != yj) {
                args.back() = z;
                emit(s, args, &c.pair(xj, yj));
            }
        }
        const int xn = x[2 * un - 2], yn = x[2 * un - 1];
        const Rational s = parity_sign(n + 1);
        Args args(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(2 * un - 2));
        args.push_back(xn);
        emit(s, args, &c.pair(yn, z));
        args.back() = yn;
        emit(s, args, &c.pair(z, xn));
        break;
    }
    }
}

void check_kind(const Representation& r, const CochainSpace& space)
{
    if (space.kind() != r.kind() || space.dim_g() != r.algebra().dim() || space.dim_v() != r.dim_v())
        throw InputError("cochain does not belong to the complex of this representation");
}

} // namespace

CochainSpace cochain_space(const Representation& r, int n)
{
    return CochainSpace(r.kind(), n, r.algebra().dim(), r.dim_v());
}

Cochain coboundary(const Representation& r, const Cochain& f)
{
    check_kind(r, f.space());
    const Context context(r);
    const int n = f.space().degree();
    const CochainSpace target = f.space().next();
    const int dv = r.dim_v();

    return tabulate(target, [&](const Args& x) {
        Vector acc = zero_vector(dv);
        Vector value(dv);
        auto emit = [&](const Rational& coeff, const Args& args, const Matrix* action) {
            if (!action) {
                f.accumulate(args, coeff, acc);
                return;
            }
            value.setConstant(Rational(0));
            f.accumulate(args, coeff, value);
            acc += *action * value;
        };
        coboundary_terms(context, x, n, emit);
        return acc;
    });
}

SparseColumns coboundary_sparse(const Representation& r, int n)
{
    const CochainSpace source = cochain_space(r, n);
    const CochainSpace target = source.next();
    const Context context(r);
    const int dv = r.dim_v();

    std::vector<std::vector<SparseEntry>> columns(static_cast<std::size_t>(source.dimension()));
    Index row_base = 0;
    auto emit = [&](const Rational& coeff, const Args& args, const Matrix* action) {
        const auto slot = source.locate(args);
        if (!slot)
            return;
        const Rational c = slot->sign > 0 ? coeff : Rational(-coeff);
        for (int b = 0; b < dv; ++b) {
            auto& column = columns[static_cast<std::size_t>(slot->offset + b)];
            if (!action) {
                column.push_back({row_base + b, c});
                continue;
            }
            for (int out = 0; out < dv; ++out) {
                const Rational& a = (*action)(out, b);
                if (!is_zero(a))
                    column.push_back({row_base + out, c * a});
            }
        }
    };
    for (Index k = 0; k < target.domain_size(); ++k) {
        row_base = k * dv;
        coboundary_terms(context, target.domain_tuple(k), n, emit);
    }

    SparseColumns out(target.dimension(), source.dimension());
    for (std::size_t col = 0; col < columns.size(); ++col)
        out.set_column(static_cast<Index>(col), std::move(columns[col]));
    return out;
}

Matrix coboundary_matrix(const Representation& r, int n)
{
    return coboundary_sparse(r, n).to_dense();
}

int default_max_degree(AlgebraKind kind, int dim_g)
{
    switch (kind) {
    case AlgebraKind::lie: return dim_g;
    case AlgebraKind::prelie: return dim_g + 1;
    default: return 4;
    }
}

CohomologyReport cohomology_dims(const Representation& r, int max_degree)
{
    if (!validate_structure(r.algebra(), 1).valid)
        throw InputError("cohomology requires a valid algebra");
    if (!check_representation(r, 1).valid)
        throw InputError("cohomology requires a valid representation");
    const int first = first_degree(r.kind());
    if (max_degree < first)
        throw InputError("maximal degree " + std::to_string(max_degree) + " is below the first degree " +
                         std::to_string(first) + " of the complex");

    CohomologyReport report{r.kind(), {}};
    Index previous_rank = 0;
    std::optional<SparseColumns> previous;
    for (int n = first; n <= max_degree; ++n) {
        SparseColumns d = coboundary_sparse(r, n);
        if (previous) {
            const SparseColumns square = multiply(d, *previous);
            for (Index col = 0; col < square.cols(); ++col)
                if (!square.column(col).empty())
                    throw std::logic_error("d_" + std::to_string(n) + " d_" + std::to_string(n - 1) +
                                           " is nonzero");
        }
        const Index rk = rank(d);
        CohomologyDegree degree;
        degree.n = n;
        degree.dim_c = d.cols();
        degree.dim_z = d.cols() - rk;
        degree.dim_b = n == first ? 0 : previous_rank;
        degree.dim_h = degree.dim_z - degree.dim_b;
        report.degrees.push_back(degree);
        previous_rank = rk;
        previous = std::move(d);
    }
    return report;
}

} // namespace defcoh
