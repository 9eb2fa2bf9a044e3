#ifndef ADJOINT_RATIONAL_HPP
#define ADJOINT_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace adjoint
{

// Exact arbitrary-precision scalars. cpp_rational keeps itself normalised
// (lowest terms, positive denominator) after every operation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1)
{
    return Rational(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rational &q)
{
    return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rational &q)
{
    return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational &q)
{
    return denominator_of(q) == 1;
}

Integer ceil(const Rational &q);
Integer floor(const Rational &q);

// Canonical rendering "p/q" in lowest terms; integers render as "n/1".
std::string to_string(const Rational &q);

// Accepts "p/q", "p" (optionally signed). Throws Error(parse_error).
Rational parse_rational(std::string_view text);

} // namespace adjoint

#endif
