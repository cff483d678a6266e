#ifndef DEFCOH_SCALAR_HPP
#define DEFCOH_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace defcoh {

/// Exact rational over GMP. Always canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using VectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Vector = VectorT<Rational>;
using Matrix = MatrixT<Rational>;

/// Thrown for malformed user input (bad shapes, kinds, rational strings).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or an integer string. Any valid fraction is accepted; q must be nonzero.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string format_rational(const Rational& value);

inline bool is_zero(const Rational& x) { return x.is_zero(); }

template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j)))
                return false;
    return true;
}

inline Vector zero_vector(Index n) { return Vector::Constant(n, Rational(0)); }
inline Matrix zero_matrix(Index r, Index c) { return Matrix::Constant(r, c, Rational(0)); }

inline Vector unit_vector(Index n, Index k)
{
    Vector v = zero_vector(n);
    v(k) = 1;
    return v;
}

inline int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace defcoh

#endif // DEFCOH_SCALAR_HPP
