#include "defcoh/scalar.hpp"

#include <cctype>

namespace defcoh {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

boost::multiprecision::mpz_int parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return boost::multiprecision::mpz_int(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw InputError("invalid rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den))
        throw InputError("invalid rational '" + std::string(text) + "'");
    const auto d = parse_integer(den);
    if (d == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string format_rational(const Rational& value)
{
    return value.str();
}

} // namespace defcoh
