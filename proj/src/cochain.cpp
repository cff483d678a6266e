#include "defcoh/cochain.hpp"

#include "defcoh/combinatorics.hpp"

#include <array>

namespace defcoh {

int first_degree(AlgebraKind kind)
{
    return (kind == AlgebraKind::prelie || kind == AlgebraKind::threelie) ? 1 : 0;
}

CochainSpace::CochainSpace(AlgebraKind kind, int degree, int dim_g, int dim_v)
    : kind_(kind), degree_(degree), dim_g_(dim_g), dim_v_(dim_v)
{
    if (dim_g < 0 || dim_v < 0)
        throw InputError("cochain space dimensions must be non-negative");
    if (degree < first_degree(kind))
        throw InputError(std::string(kind_name(kind)) + " cochains start at degree " +
                         std::to_string(first_degree(kind)));

    switch (kind) {
    case AlgebraKind::associative:
    case AlgebraKind::leibniz:
        blocks_.assign(static_cast<std::size_t>(degree), 1);
        break;
    case AlgebraKind::lie:
        if (degree > 0)
            blocks_.push_back(degree);
        break;
    case AlgebraKind::prelie:
        if (degree > 1)
            blocks_.push_back(degree - 1);
        blocks_.push_back(1);
        break;
    case AlgebraKind::threelie:
        blocks_.assign(static_cast<std::size_t>(degree - 1), 2);
        blocks_.push_back(1);
        break;
    }

    for (int b : blocks_) {
        arity_ += b;
        radix_.push_back(binomial(dim_g_, b));
        domain_size_ *= radix_.back();
    }
}

std::vector<int> CochainSpace::domain_tuple(Index k) const
{
    std::vector<Index> ranks(blocks_.size());
    for (std::size_t b = blocks_.size(); b-- > 0;) {
        ranks[b] = k % radix_[b];
        k /= radix_[b];
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(arity_));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        // unrank a lexicographic k-subset
        const int size = blocks_[b];
        Index r = ranks[b];
        int v = 0;
        for (int t = 0; t < size; ++t) {
            while (true) {
                const Index count = binomial(dim_g_ - 1 - v, size - 1 - t);
                if (r < count)
                    break;
                r -= count;
                ++v;
            }
            out.push_back(v);
            ++v;
        }
    }
    return out;
}

std::vector<std::vector<int>> CochainSpace::domain_tuples() const
{
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(domain_size_));
    for (Index k = 0; k < domain_size_; ++k)
        out.push_back(domain_tuple(k));
    return out;
}

std::optional<CochainSpace::Slot> CochainSpace::locate(std::span<const int> args) const
{
    if (static_cast<int>(args.size()) != arity_)
        throw InputError("cochain expects " + std::to_string(arity_) + " arguments, got " +
                         std::to_string(args.size()));
    std::array<int, 64> buffer{};
    if (args.size() > buffer.size())
        throw InputError("cochain arity too large");
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] < 0 || args[i] >= dim_g_)
            throw InputError("cochain argument index out of range");
        buffer[i] = args[i];
    }

    int sign = 1;
    Index index = 0;
    std::size_t pos = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const auto size = static_cast<std::size_t>(blocks_[b]);
        std::span<int> block(buffer.data() + pos, size);
        const int s = sort_wedge(block);
        if (s == 0)
            return std::nullopt;
        sign *= s;
        index = index * radix_[b] + wedge_rank(block, dim_g_);
        pos += size;
    }
    return Slot{sign, index * dim_v_};
}

Cochain::Cochain(CochainSpace space, Vector coords) : space_(std::move(space)), coords_(std::move(coords))
{
    if (coords_.size() != space_.dimension())
        throw InputError("cochain has " + std::to_string(coords_.size()) +
                         " coordinates, expected " + std::to_string(space_.dimension()));
}

Cochain Cochain::zero(const CochainSpace& space)
{
    return Cochain(space, zero_vector(space.dimension()));
}

Cochain Cochain::basis(const CochainSpace& space, Index k)
{
    return Cochain(space, unit_vector(space.dimension(), k));
}

Vector Cochain::evaluate(std::span<const int> args) const
{
    Vector out = zero_vector(space_.dim_v());
    accumulate(args, Rational(1), out);
    return out;
}

void Cochain::accumulate(std::span<const int> args, const Rational& coeff, Vector& out) const
{
    const auto slot = space_.locate(args);
    if (!slot)
        return;
    const int dv = space_.dim_v();
    for (int k = 0; k < dv; ++k) {
        const Rational& c = coords_(slot->offset + k);
        if (defcoh::is_zero(c))
            continue;
        if (slot->sign > 0)
            out(k) += coeff * c;
        else
            out(k) -= coeff * c;
    }
}

Cochain& Cochain::operator+=(const Cochain& other)
{
    if (!(space_ == other.space_))
        throw InputError("cannot add cochains from different spaces");
    coords_ += other.coords_;
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other)
{
    if (!(space_ == other.space_))
        throw InputError("cannot subtract cochains from different spaces");
    coords_ -= other.coords_;
    return *this;
}

Cochain& Cochain::operator*=(const Rational& s)
{
    for (Index i = 0; i < coords_.size(); ++i)
        coords_(i) *= s;
    return *this;
}

Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
Cochain operator*(const Rational& s, Cochain a) { return a *= s; }

Cochain from_vector(const CochainSpace& space, Vector v)
{
    return Cochain(space, std::move(v));
}

Cochain structure_cochain(const Algebra& a)
{
    const CochainSpace space = graded_space(a.kind(), 1, a.dim());
    return tabulate(space, [&](const std::vector<int>& t) { return a.apply(t); });
}

Algebra algebra_from_cochain(const Cochain& c)
{
    const auto& space = c.space();
    if (space.degree() != 2 || space.dim_g() != space.dim_v())
        throw InputError("structure cochain must be a degree-1 element with values in g");
    const AlgebraKind kind = space.kind();
    const int d = space.dim_g();
    const int arity = structure_arity(kind);
    Index total = 1;
    for (int i = 0; i < arity; ++i)
        total *= d;
    std::vector<Rational> constants;
    constants.reserve(static_cast<std::size_t>(total * d));

    std::vector<int> t(static_cast<std::size_t>(arity), 0);
    for (Index flat = 0; flat < total; ++flat) {
        Index rest = flat;
        for (int i = arity - 1; i >= 0; --i) {
            t[static_cast<std::size_t>(i)] = static_cast<int>(rest % d);
            rest /= d;
        }
        const Vector v = c.evaluate(t);
        for (int k = 0; k < d; ++k)
            constants.push_back(v(k));
    }
    // Algebra rejects a threelie tensor that is not totally skew.
    return Algebra(kind, d, std::move(constants));
}

} // namespace defcoh
