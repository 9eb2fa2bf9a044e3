#ifndef ADJOINT_TESTS_SUPPORT_HPP
#define ADJOINT_TESTS_SUPPORT_HPP

#include <string>

#include <doctest.h>

#include <adjoint/divisor.hpp>
#include <adjoint/error.hpp>
#include <adjoint/rational.hpp>

namespace test_support
{

inline adjoint::Rational q(long long n, long long d = 1)
{
    return adjoint::make_rational(n, d);
}

inline adjoint::DivisorExpr div(const std::string &text)
{
    return adjoint::parse_divisor(text);
}

template <typename F>
adjoint::ErrorKind error_kind_of(F &&f)
{
    try {
        f();
    } catch (const adjoint::Error &e) {
        return e.kind();
    }
    FAIL("expected an adjoint::Error");
    return adjoint::ErrorKind::unknown_symbol;
}

} // namespace test_support

namespace doctest
{
template <>
struct StringMaker<adjoint::Rational> {
    static String convert(const adjoint::Rational &v)
    {
        return adjoint::to_string(v).c_str();
    }
};
template <>
struct StringMaker<adjoint::DivisorExpr> {
    static String convert(const adjoint::DivisorExpr &v)
    {
        return adjoint::to_string(v).c_str();
    }
};
template <>
struct StringMaker<adjoint::ErrorKind> {
    static String convert(adjoint::ErrorKind k)
    {
        return adjoint::error_kind_name(k);
    }
};
} // namespace doctest

#endif
