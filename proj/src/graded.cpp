#include <adjoint/graded.hpp>

#include <algorithm>
#include <string>

#include <adjoint/error.hpp>

namespace adjoint
{

namespace
{

template <typename Map, typename Key>
void accumulate(Map &m, Key &&key, const Rational &coeff)
{
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = m.try_emplace(std::forward<Key>(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            m.erase(it);
        }
    }
}

void check_degree(int d)
{
    if (d < 0 || d > 3) {
        throw Error(ErrorKind::degree_overflow, "class degree " + std::to_string(d) + " outside 0..3");
    }
}

} // namespace

// ClassExpr

ClassExpr::ClassExpr(int degree) : m_degree(degree)
{
    check_degree(degree);
    if (degree == 3) {
        throw Error(ErrorKind::invalid_argument, "degree 3 classes are represented as NumberExpr");
    }
}

ClassExpr ClassExpr::constant(const Rational &value)
{
    ClassExpr c(0);
    c.add_term({}, value);
    return c;
}

ClassExpr ClassExpr::from_divisor(const DivisorExpr &d)
{
    ClassExpr c(1);
    for (const auto &[sym, coeff] : d.terms()) {
        c.add_term({sym}, coeff);
    }
    return c;
}

ClassExpr ClassExpr::symbol(const std::string &name)
{
    return from_divisor(DivisorExpr(name));
}

ClassExpr ClassExpr::c2_atom(const Rational &coeff)
{
    ClassExpr c(2);
    c.add_c2(coeff);
    return c;
}

Rational ClassExpr::coeff(Monomial m) const
{
    std::sort(m.begin(), m.end());
    const auto it = m_terms.find(m);
    return it == m_terms.end() ? Rational(0) : it->second;
}

DivisorExpr ClassExpr::to_divisor() const
{
    if (m_degree != 1) {
        throw Error(ErrorKind::invalid_argument, "only degree 1 classes are divisors");
    }
    DivisorExpr d;
    for (const auto &[m, c] : m_terms) {
        d.add(m.front(), c);
    }
    return d;
}

void ClassExpr::add_term(Monomial m, const Rational &coeff)
{
    if (static_cast<int>(m.size()) != m_degree) {
        throw Error(ErrorKind::invalid_argument, "monomial degree does not match class degree");
    }
    std::sort(m.begin(), m.end());
    accumulate(m_terms, std::move(m), coeff);
}

void ClassExpr::add_c2(const Rational &coeff)
{
    if (m_degree != 2 && coeff != 0) {
        throw Error(ErrorKind::invalid_argument, "the c2 atom only occurs in degree 2");
    }
    m_c2 += coeff;
}

ClassExpr &ClassExpr::operator+=(const ClassExpr &other)
{
    if (other.m_degree != m_degree) {
        throw Error(ErrorKind::invalid_argument, "adding classes of degrees " + std::to_string(m_degree) + " and "
                                                     + std::to_string(other.m_degree));
    }
    for (const auto &[m, c] : other.m_terms) {
        accumulate(m_terms, m, c);
    }
    m_c2 += other.m_c2;
    return *this;
}

ClassExpr &ClassExpr::operator-=(const ClassExpr &other)
{
    return *this += -other;
}

ClassExpr &ClassExpr::operator*=(const Rational &scalar)
{
    if (scalar == 0) {
        m_terms.clear();
        m_c2 = 0;
        return *this;
    }
    for (auto &[m, c] : m_terms) {
        c *= scalar;
    }
    m_c2 *= scalar;
    return *this;
}

// NumberExpr

NumberExpr NumberExpr::constant(const Rational &value)
{
    NumberExpr n;
    n.m_const = value;
    return n;
}

NumberExpr NumberExpr::chi_O_atom(const Rational &coeff)
{
    NumberExpr n;
    n.m_chi = coeff;
    return n;
}

NumberExpr NumberExpr::c2_pairing(const std::string &symbol, const Rational &coeff)
{
    NumberExpr n;
    n.add_pairing(symbol, coeff);
    return n;
}

Rational NumberExpr::cubic(SymbolTriple t) const
{
    std::sort(t.begin(), t.end());
    const auto it = m_cubic.find(t);
    return it == m_cubic.end() ? Rational(0) : it->second;
}

Rational NumberExpr::pairing(const std::string &symbol) const
{
    const auto it = m_c2.find(symbol);
    return it == m_c2.end() ? Rational(0) : it->second;
}

void NumberExpr::add_cubic(SymbolTriple t, const Rational &coeff)
{
    std::sort(t.begin(), t.end());
    accumulate(m_cubic, std::move(t), coeff);
}

void NumberExpr::add_pairing(const std::string &symbol, const Rational &coeff)
{
    accumulate(m_c2, symbol, coeff);
}

NumberExpr NumberExpr::reduced() const
{
    NumberExpr out = *this;
    const auto it = out.m_c2.find(canonical_symbol);
    if (it != out.m_c2.end()) {
        out.m_chi += Rational(-24) * it->second;
        out.m_c2.erase(it);
    }
    return out;
}

NumberExpr &NumberExpr::operator+=(const NumberExpr &other)
{
    for (const auto &[t, c] : other.m_cubic) {
        accumulate(m_cubic, t, c);
    }
    for (const auto &[s, c] : other.m_c2) {
        accumulate(m_c2, s, c);
    }
    m_chi += other.m_chi;
    m_const += other.m_const;
    return *this;
}

NumberExpr &NumberExpr::operator-=(const NumberExpr &other)
{
    return *this += -other;
}

NumberExpr &NumberExpr::operator*=(const Rational &scalar)
{
    if (scalar == 0) {
        *this = NumberExpr();
        return *this;
    }
    for (auto &[t, c] : m_cubic) {
        c *= scalar;
    }
    for (auto &[s, c] : m_c2) {
        c *= scalar;
    }
    m_chi *= scalar;
    m_const *= scalar;
    return *this;
}

// Products

namespace
{

// Product of the monomial parts only; result degree da + db <= 2.
ClassExpr multiply_monomials(const ClassExpr &a, const ClassExpr &b)
{
    ClassExpr out(a.degree() + b.degree());
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

// Accumulates the degree 3 monomial products of a and b into n.
void intersect_monomials(NumberExpr &n, const ClassExpr &a, const ClassExpr &b)
{
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            SymbolTriple t;
            std::size_t k = 0;
            for (const auto &s : ma) {
                t[k++] = s;
            }
            for (const auto &s : mb) {
                t[k++] = s;
            }
            n.add_cubic(std::move(t), ca * cb);
        }
    }
}

ClassExpr strip_c2(const ClassExpr &c)
{
    ClassExpr out = c;
    out.add_c2(-c.c2_coeff());
    return out;
}

} // namespace

Product expand_product(std::span<const ClassExpr> factors)
{
    int total = 0;
    int with_c2 = 0;
    for (const auto &f : factors) {
        total += f.degree();
        if (f.c2_coeff() != 0) {
            ++with_c2;
        }
    }
    if (with_c2 > 1) {
        throw Error(ErrorKind::double_c2_atom, "product contains the c2 atom more than once");
    }
    if (total > 3) {
        throw Error(ErrorKind::degree_overflow, "product of total degree " + std::to_string(total) + " exceeds 3");
    }

    // Multiply everything except the c2 atom, and separately the c2 atom times
    // the other factors (whose total degree is then at most 1).
    Rational c2_coeff(0);
    std::size_t c2_index = factors.size();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].c2_coeff() != 0) {
            c2_coeff = factors[i].c2_coeff();
            c2_index = i;
        }
    }

    if (total < 3) {
        ClassExpr acc = ClassExpr::constant(Rational(1));
        for (const auto &f : factors) {
            acc = multiply_monomials(acc, strip_c2(f));
        }
        if (c2_index != factors.size()) {
            ClassExpr others = ClassExpr::constant(Rational(1));
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i != c2_index) {
                    others = multiply_monomials(others, factors[i]);
                }
            }
            // total < 3 and the c2 factor has degree 2: the others are scalars.
            acc.add_c2(c2_coeff * others.coeff({}));
        }
        return acc;
    }

    NumberExpr out;
    {
        ClassExpr acc = ClassExpr::constant(Rational(1));
        std::size_t last = factors.size();
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() > 0) {
                last = i;
            }
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i != last) {
                acc = multiply_monomials(acc, strip_c2(factors[i]));
            }
        }
        intersect_monomials(out, acc, strip_c2(factors[last]));
    }
    if (c2_index != factors.size()) {
        ClassExpr others = ClassExpr::constant(Rational(1));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i != c2_index) {
                others = multiply_monomials(others, factors[i]);
            }
        }
        for (const auto &[m, c] : others.terms()) {
            out.add_pairing(m.front(), c2_coeff * c);
        }
    }
    return out;
}

ClassExpr multiply(const ClassExpr &a, const ClassExpr &b)
{
    const ClassExpr fs[] = {a, b};
    auto r = expand_product(fs);
    if (auto *c = std::get_if<ClassExpr>(&r)) {
        return std::move(*c);
    }
    throw Error(ErrorKind::invalid_argument, "multiply() of total degree 3; use intersect()");
}

namespace
{

NumberExpr as_number(Product r)
{
    if (auto *n = std::get_if<NumberExpr>(&r)) {
        return std::move(*n);
    }
    throw Error(ErrorKind::invalid_argument, "intersect() needs total degree 3");
}

} // namespace

NumberExpr intersect(const ClassExpr &a, const ClassExpr &b)
{
    const ClassExpr fs[] = {a, b};
    return as_number(expand_product(fs));
}

NumberExpr intersect(const ClassExpr &a, const ClassExpr &b, const ClassExpr &c)
{
    const ClassExpr fs[] = {a, b, c};
    return as_number(expand_product(fs));
}

bool identity_check(const NumberExpr &lhs, const NumberExpr &rhs)
{
    return lhs.reduced() == rhs.reduced();
}

// Rendering

namespace
{

std::string coeff_prefix(const Rational &c, bool first)
{
    std::string out;
    Rational mag = c;
    if (c < 0) {
        out = first ? "-" : " - ";
        mag = -c;
    } else if (!first) {
        out = " + ";
    }
    out += is_integral(mag) ? numerator_of(mag).str() : "(" + to_string(mag) + ")";
    return out;
}

template <typename Range>
std::string join_symbols(const Range &r)
{
    std::string out;
    for (const auto &s : r) {
        out += "*";
        out += s;
    }
    return out;
}

} // namespace

std::string to_string(const ClassExpr &c)
{
    std::string out;
    bool first = true;
    for (const auto &[m, coeff] : c.terms()) {
        out += coeff_prefix(coeff, first) + join_symbols(m);
        first = false;
    }
    if (c.c2_coeff() != 0) {
        out += coeff_prefix(c.c2_coeff(), first) + "*c2";
        first = false;
    }
    return first ? "0" : out;
}

std::string to_string(const NumberExpr &n)
{
    std::string out;
    bool first = true;
    for (const auto &[t, coeff] : n.cubic_terms()) {
        out += coeff_prefix(coeff, first) + join_symbols(t);
        first = false;
    }
    for (const auto &[s, coeff] : n.c2_pairings()) {
        out += coeff_prefix(coeff, first) + "*c2*" + s;
        first = false;
    }
    if (n.chi_O_coeff() != 0) {
        out += coeff_prefix(n.chi_O_coeff(), first) + "*chi(O)";
        first = false;
    }
    if (n.constant_term() != 0) {
        out += coeff_prefix(n.constant_term(), first);
        first = false;
    }
    return first ? "0" : out;
}

} // namespace adjoint
