#ifndef ADJOINT_DIVISOR_HPP
#define ADJOINT_DIVISOR_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <adjoint/rational.hpp>

namespace adjoint
{

// A formal rational linear combination of divisor symbols. Zero coefficients
// are never stored, so structural equality is equality of classes.
class DivisorExpr
{
public:
    using container_type = std::map<std::string, Rational>;

    DivisorExpr() = default;
    explicit DivisorExpr(const std::string &symbol, Rational coeff = Rational(1));
    DivisorExpr(std::initializer_list<std::pair<const std::string, Rational>> terms);

    static DivisorExpr symbol(const std::string &name)
    {
        return DivisorExpr(name);
    }

    const container_type &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    Rational coeff(const std::string &symbol) const;

    void add(const std::string &symbol, const Rational &coeff);

    DivisorExpr &operator+=(const DivisorExpr &other);
    DivisorExpr &operator-=(const DivisorExpr &other);
    DivisorExpr &operator*=(const Rational &scalar);

    friend DivisorExpr operator+(DivisorExpr a, const DivisorExpr &b)
    {
        return a += b;
    }
    friend DivisorExpr operator-(DivisorExpr a, const DivisorExpr &b)
    {
        return a -= b;
    }
    friend DivisorExpr operator-(DivisorExpr a)
    {
        return a *= Rational(-1);
    }
    friend DivisorExpr operator*(const Rational &s, DivisorExpr a)
    {
        return a *= s;
    }
    friend DivisorExpr operator*(DivisorExpr a, const Rational &s)
    {
        return a *= s;
    }

    friend bool operator==(const DivisorExpr &, const DivisorExpr &) = default;

    // Replace every symbol by the expression the callback returns for it.
    template <typename F>
    DivisorExpr substitute(F &&f) const
    {
        DivisorExpr out;
        for (const auto &[sym, c] : m_terms) {
            out += c * f(sym);
        }
        return out;
    }

private:
    container_type m_terms;
};

// Renders as e.g. "-4*H+2*E", "1/3*A", "H", "0". Symbols in lexicographic order.
std::string to_string(const DivisorExpr &d);

// Grammar: term (('+'|'-') term)*, term := [coef ['*']] SYM | coef,
// coef := digits ['/' digits]. Whitespace is ignored. A bare coefficient is
// only accepted when it is zero.
DivisorExpr parse_divisor(std::string_view text);

bool is_valid_symbol(std::string_view name);

// If b = c*a for some rational c > 0, returns true. Zero is a multiple of
// nothing but itself.
bool is_positive_multiple(const DivisorExpr &b, const DivisorExpr &a);

} // namespace adjoint

#endif
