#ifndef ADJOINT_GRADED_HPP
#define ADJOINT_GRADED_HPP

#include <array>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <adjoint/divisor.hpp>
#include <adjoint/rational.hpp>

namespace adjoint
{

// The free symbol reserved for the canonical class in the symbolic layer.
inline const std::string canonical_symbol = "K";

// Sorted multiset of divisor symbols.
using Monomial = std::vector<std::string>;
using SymbolTriple = std::array<std::string, 3>;

// Homogeneous element of the graded ring Q[symbols] (+ c2 atom) truncated
// above degree 3. Degree 3 products do not live here: they become NumberExpr.
class ClassExpr
{
public:
    explicit ClassExpr(int degree = 0);

    static ClassExpr constant(const Rational &value);
    static ClassExpr from_divisor(const DivisorExpr &d);
    static ClassExpr symbol(const std::string &name);
    static ClassExpr c2_atom(const Rational &coeff = Rational(1));

    int degree() const noexcept
    {
        return m_degree;
    }
    const std::map<Monomial, Rational> &terms() const noexcept
    {
        return m_terms;
    }
    const Rational &c2_coeff() const noexcept
    {
        return m_c2;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty() && m_c2 == 0;
    }

    // Coefficient of one monomial (order of the symbols is irrelevant).
    Rational coeff(Monomial m) const;

    // Degree-1 classes only.
    DivisorExpr to_divisor() const;

    ClassExpr &operator+=(const ClassExpr &other);
    ClassExpr &operator-=(const ClassExpr &other);
    ClassExpr &operator*=(const Rational &scalar);

    friend ClassExpr operator+(ClassExpr a, const ClassExpr &b)
    {
        return a += b;
    }
    friend ClassExpr operator-(ClassExpr a, const ClassExpr &b)
    {
        return a -= b;
    }
    friend ClassExpr operator-(ClassExpr a)
    {
        return a *= Rational(-1);
    }
    friend ClassExpr operator*(const Rational &s, ClassExpr a)
    {
        return a *= s;
    }

    friend bool operator==(const ClassExpr &, const ClassExpr &) = default;

    void add_term(Monomial m, const Rational &coeff);
    void add_c2(const Rational &coeff);

private:
    int m_degree;
    std::map<Monomial, Rational> m_terms;
    Rational m_c2;
};

// A formal intersection number: cubic monomials, pairings c2(X).D, the atom
// chi(O_X) and a plain rational constant.
class NumberExpr
{
public:
    NumberExpr() = default;

    static NumberExpr constant(const Rational &value);
    static NumberExpr chi_O_atom(const Rational &coeff = Rational(1));
    static NumberExpr c2_pairing(const std::string &symbol, const Rational &coeff = Rational(1));

    const std::map<SymbolTriple, Rational> &cubic_terms() const noexcept
    {
        return m_cubic;
    }
    const std::map<std::string, Rational> &c2_pairings() const noexcept
    {
        return m_c2;
    }
    const Rational &chi_O_coeff() const noexcept
    {
        return m_chi;
    }
    const Rational &constant_term() const noexcept
    {
        return m_const;
    }
    bool is_zero() const noexcept
    {
        return m_cubic.empty() && m_c2.empty() && m_chi == 0 && m_const == 0;
    }

    Rational cubic(SymbolTriple t) const;
    Rational pairing(const std::string &symbol) const;

    void add_cubic(SymbolTriple t, const Rational &coeff);
    void add_pairing(const std::string &symbol, const Rational &coeff);

    // Rewrites c2.K as -24 chi(O), the relation every smooth threefold obeys.
    // Identities are compared in this reduced form.
    NumberExpr reduced() const;

    NumberExpr &operator+=(const NumberExpr &other);
    NumberExpr &operator-=(const NumberExpr &other);
    NumberExpr &operator*=(const Rational &scalar);

    friend NumberExpr operator+(NumberExpr a, const NumberExpr &b)
    {
        return a += b;
    }
    friend NumberExpr operator-(NumberExpr a, const NumberExpr &b)
    {
        return a -= b;
    }
    friend NumberExpr operator-(NumberExpr a)
    {
        return a *= Rational(-1);
    }
    friend NumberExpr operator*(const Rational &s, NumberExpr a)
    {
        return a *= s;
    }

    friend bool operator==(const NumberExpr &, const NumberExpr &) = default;

private:
    std::map<SymbolTriple, Rational> m_cubic;
    std::map<std::string, Rational> m_c2;
    Rational m_chi;
    Rational m_const;
};

using Product = std::variant<ClassExpr, NumberExpr>;

// Expands a product of homogeneous classes. Total degree must be at most 3
// (degree_overflow otherwise) and at most one factor may carry the c2 atom
// (double_c2_atom otherwise). Total degree 3 yields a NumberExpr.
Product expand_product(std::span<const ClassExpr> factors);

// Shorthands for the common shapes. intersect() requires total degree 3.
ClassExpr multiply(const ClassExpr &a, const ClassExpr &b);
NumberExpr intersect(const ClassExpr &a, const ClassExpr &b);
NumberExpr intersect(const ClassExpr &a, const ClassExpr &b, const ClassExpr &c);

// True iff both sides have the same reduced canonical form, which makes the
// identity hold on every threefold profile.
bool identity_check(const NumberExpr &lhs, const NumberExpr &rhs);

std::string to_string(const ClassExpr &c);
std::string to_string(const NumberExpr &n);

} // namespace adjoint

#endif
