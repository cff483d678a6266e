#include "defcoh/algebra.hpp"

#include "defcoh/combinatorics.hpp"

#include <algorithm>
#include <array>

namespace defcoh {

std::string_view kind_name(AlgebraKind kind)
{
    switch (kind) {
    case AlgebraKind::associative: return "associative";
    case AlgebraKind::lie: return "lie";
    case AlgebraKind::prelie: return "prelie";
    case AlgebraKind::leibniz: return "leibniz";
    case AlgebraKind::threelie: return "3lie";
    }
    return "?";
}

AlgebraKind parse_kind(std::string_view name)
{
    for (AlgebraKind k : all_kinds)
        if (kind_name(k) == name)
            return k;
    throw InputError("unknown algebra kind '" + std::string(name) + "'");
}

namespace {

Index ipow(Index base, int exp)
{
    Index r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// Visits every input tuple of the given arity over {0..dim-1} in lexicographic order.
template <typename F>
void for_each_tuple(int dim, int arity, F&& f)
{
    std::vector<int> t(static_cast<std::size_t>(arity), 0);
    if (dim == 0 && arity > 0)
        return;
    while (true) {
        f(std::span<const int>(t));
        int i = arity - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == dim - 1) {
            t[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            return;
        ++t[static_cast<std::size_t>(i)];
    }
}

} // namespace

Algebra::Algebra(AlgebraKind kind, int dim, std::vector<Rational> constants)
    : kind_(kind), dim_(dim), constants_(std::move(constants))
{
    if (dim < 0)
        throw InputError("algebra dimension must be non-negative");
    const Index expected = ipow(dim, arity() + 1);
    if (static_cast<Index>(constants_.size()) != expected)
        throw InputError("structure tensor has " + std::to_string(constants_.size()) +
                         " entries, expected " + std::to_string(expected));
    if (!is_skew_kind(kind_))
        return;

    // every transposition of two inputs must flip the sign
    for_each_tuple(dim_, arity(), [&](std::span<const int> in) {
        std::vector<int> swapped(in.begin(), in.end());
        for (std::size_t a = 0; a + 1 < swapped.size(); ++a) {
            std::swap(swapped[a], swapped[a + 1]);
            for (int k = 0; k < dim_; ++k) {
                if (constant(in, k) != -constant(swapped, k))
                    throw InputError(std::string(kind_name(kind_)) +
                                     " structure constants are not skew-symmetric");
            }
            std::swap(swapped[a], swapped[a + 1]);
        }
    });
}

Algebra Algebra::zero(AlgebraKind kind, int dim)
{
    return Algebra(kind, dim,
                   std::vector<Rational>(static_cast<std::size_t>(ipow(dim, structure_arity(kind) + 1)),
                                         Rational(0)));
}

Algebra Algebra::from_entries(AlgebraKind kind, int dim, std::span<const StructureEntry> entries)
{
    const int arity = structure_arity(kind);
    std::vector<Rational> c(static_cast<std::size_t>(ipow(dim, arity + 1)), Rational(0));
    auto at = [&](std::span<const int> in, int out) -> Rational& {
        Index pos = 0;
        for (int i : in)
            pos = pos * dim + i;
        return c[static_cast<std::size_t>(pos * dim + out)];
    };

    for (const auto& e : entries) {
        if (static_cast<int>(e.in.size()) != arity)
            throw InputError("structure entry has " + std::to_string(e.in.size()) +
                             " inputs, expected " + std::to_string(arity));
        if (e.out.size() != dim)
            throw InputError("structure entry output has wrong length");
        for (int i : e.in)
            if (i < 0 || i >= dim)
                throw InputError("structure entry index out of range");

        if (!is_skew_kind(kind)) {
            for (int k = 0; k < dim; ++k)
                at(e.in, k) += e.out(k);
            continue;
        }
        if (!std::is_sorted(e.in.begin(), e.in.end()) ||
            std::adjacent_find(e.in.begin(), e.in.end()) != e.in.end())
            throw InputError("skew structure entries must use strictly increasing input tuples");

        std::vector<int> perm(e.in.begin(), e.in.end());
        do {
            std::vector<int> copy = perm;
            const int sign = sort_wedge(copy);
            for (int k = 0; k < dim; ++k)
                at(perm, k) += sign * e.out(k);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return Algebra(kind, dim, std::move(c));
}

Vector Algebra::apply(std::span<const int> in) const
{
    Vector v(dim_);
    const auto base = static_cast<std::size_t>(offset(in));
    for (int k = 0; k < dim_; ++k)
        v(k) = constants_[base + static_cast<std::size_t>(k)];
    return v;
}

Vector Algebra::apply(const Vector& x, const Vector& y) const
{
    Vector out = zero_vector(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (is_zero(x(i)))
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (is_zero(y(j)))
                continue;
            const Rational w = x(i) * y(j);
            const auto base = static_cast<std::size_t>(((Index(i) * dim_ + j) * dim_));
            for (int k = 0; k < dim_; ++k)
                if (!is_zero(constants_[base + static_cast<std::size_t>(k)]))
                    out(k) += w * constants_[base + static_cast<std::size_t>(k)];
        }
    }
    return out;
}

Vector Algebra::apply(const Vector& x, const Vector& y, const Vector& z) const
{
    Vector out = zero_vector(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (is_zero(x(i)))
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (is_zero(y(j)))
                continue;
            for (int l = 0; l < dim_; ++l) {
                if (is_zero(z(l)))
                    continue;
                const Rational w = x(i) * y(j) * z(l);
                const std::array<int, 3> in{i, j, l};
                const auto base = static_cast<std::size_t>(offset(in));
                for (int k = 0; k < dim_; ++k)
                    if (!is_zero(constants_[base + static_cast<std::size_t>(k)]))
                        out(k) += w * constants_[base + static_cast<std::size_t>(k)];
            }
        }
    }
    return out;
}

std::vector<StructureEntry> Algebra::entries() const
{
    std::vector<StructureEntry> out;
    for_each_tuple(dim_, arity(), [&](std::span<const int> in) {
        if (is_skew_kind(kind_) && !std::is_sorted(in.begin(), in.end()))
            return;
        if (is_skew_kind(kind_) && std::adjacent_find(in.begin(), in.end()) != in.end())
            return;
        Vector v = apply(in);
        if (!all_zero(v))
            out.push_back(StructureEntry{std::vector<int>(in.begin(), in.end()), std::move(v)});
    });
    return out;
}

Algebra Algebra::with_kind(AlgebraKind kind) const
{
    if (structure_arity(kind) != arity())
        throw InputError("cannot reinterpret structure with a different arity");
    return Algebra(kind, dim_, constants_);
}

Algebra operator+(const Algebra& a, const Algebra& b)
{
    if (a.kind() != b.kind() || a.dim() != b.dim())
        throw InputError("cannot add structures of different kind or dimension");
    std::vector<Rational> c = a.constants();
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.constants()[i];
    return Algebra(a.kind(), a.dim(), std::move(c));
}

Algebra operator*(const Rational& s, const Algebra& a)
{
    std::vector<Rational> c = a.constants();
    for (auto& x : c)
        x *= s;
    return Algebra(a.kind(), a.dim(), std::move(c));
}

namespace {

Vector basis_vector(int dim, int i) { return unit_vector(dim, i); }

Vector structure_defect(const Algebra& a, std::span<const int> t)
{
    const int d = a.dim();
    auto m = [&](const Vector& x, const Vector& y) { return a.apply(x, y); };
    if (a.kind() == AlgebraKind::threelie) {
        const Vector x1 = basis_vector(d, t[0]), x2 = basis_vector(d, t[1]),
                     x3 = basis_vector(d, t[2]), x4 = basis_vector(d, t[3]),
                     x5 = basis_vector(d, t[4]);
        auto b = [&](const Vector& x, const Vector& y, const Vector& z) { return a.apply(x, y, z); };
        return b(x1, x2, b(x3, x4, x5)) - b(b(x1, x2, x3), x4, x5) - b(x3, b(x1, x2, x4), x5) -
               b(x3, x4, b(x1, x2, x5));
    }

    const Vector x = basis_vector(d, t[0]), y = basis_vector(d, t[1]), z = basis_vector(d, t[2]);
    switch (a.kind()) {
    case AlgebraKind::associative:
        return m(x, m(y, z)) - m(m(x, y), z);
    case AlgebraKind::lie:
        return m(x, m(y, z)) + m(y, m(z, x)) + m(z, m(x, y));
    case AlgebraKind::prelie:
        // associator symmetric in the first two arguments
        return (m(m(x, y), z) - m(x, m(y, z))) - (m(m(y, x), z) - m(y, m(x, z)));
    case AlgebraKind::leibniz:
        return m(x, m(y, z)) - m(m(x, y), z) - m(y, m(x, z));
    case AlgebraKind::threelie:
        break;
    }
    return zero_vector(d);
}

} // namespace

ValidationReport validate_structure(const Algebra& a, std::size_t witness_cap)
{
    ValidationReport report;
    const int tuple_size = a.kind() == AlgebraKind::threelie ? 5 : 3;
    for_each_tuple(a.dim(), tuple_size, [&](std::span<const int> t) {
        Vector defect = structure_defect(a, t);
        if (all_zero(defect))
            return;
        report.valid = false;
        if (report.witnesses.size() < witness_cap)
            report.witnesses.push_back(Witness{std::vector<int>(t.begin(), t.end()), std::move(defect), {}});
    });
    return report;
}

Algebra subadjacent_lie(const Algebra& a)
{
    if (a.kind() != AlgebraKind::prelie)
        throw InputError("subadjacent_lie expects a prelie algebra");
    const int d = a.dim();
    std::vector<Rational> c(a.constants().size());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                c[static_cast<std::size_t>((i * d + j) * d + k)] =
                    a.constant(std::array{i, j}, k) - a.constant(std::array{j, i}, k);
    return Algebra(AlgebraKind::lie, d, std::move(c));
}

Algebra fundamental_leibniz(const Algebra& a)
{
    if (a.kind() != AlgebraKind::threelie)
        throw InputError("fundamental_leibniz expects a 3lie algebra");
    const int d = a.dim();
    const auto pairs = wedge_basis(d, 2);
    const int n = static_cast<int>(pairs.size());
    std::vector<Rational> c(static_cast<std::size_t>(n) * n * n, Rational(0));

    // accumulate w * (e_u ^ e_v) into the output coordinates of bracket (X, Y)
    auto add_wedge = [&](int X, int Y, int u, int v, const Rational& w) {
        std::array<int, 2> pair{u, v};
        const int sign = sort_wedge(pair);
        if (sign == 0)
            return;
        const Index out = wedge_rank(pair, d);
        c[static_cast<std::size_t>((Index(X) * n + Y) * n + out)] += sign * w;
    };

    for (int X = 0; X < n; ++X) {
        const int x1 = pairs[X].indices[0], x2 = pairs[X].indices[1];
        for (int Y = 0; Y < n; ++Y) {
            const int y1 = pairs[Y].indices[0], y2 = pairs[Y].indices[1];
            const Vector first = a.apply(x1, x2, y1);
            const Vector second = a.apply(x1, x2, y2);
            for (int k = 0; k < d; ++k) {
                if (!is_zero(first(k)))
                    add_wedge(X, Y, k, y2, first(k));
                if (!is_zero(second(k)))
                    add_wedge(X, Y, y1, k, second(k));
            }
        }
    }
    return Algebra(AlgebraKind::leibniz, n, std::move(c));
}

} // namespace defcoh
