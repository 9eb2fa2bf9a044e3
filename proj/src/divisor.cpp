#include <adjoint/divisor.hpp>

#include <cctype>
#include <optional>
#include <string>

#include <adjoint/error.hpp>

namespace adjoint
{

DivisorExpr::DivisorExpr(const std::string &symbol, Rational coeff)
{
    add(symbol, coeff);
}

DivisorExpr::DivisorExpr(std::initializer_list<std::pair<const std::string, Rational>> terms)
{
    for (const auto &[sym, c] : terms) {
        add(sym, c);
    }
}

Rational DivisorExpr::coeff(const std::string &symbol) const
{
    const auto it = m_terms.find(symbol);
    return it == m_terms.end() ? Rational(0) : it->second;
}

void DivisorExpr::add(const std::string &symbol, const Rational &coeff)
{
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(symbol, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

DivisorExpr &DivisorExpr::operator+=(const DivisorExpr &other)
{
    for (const auto &[sym, c] : other.m_terms) {
        add(sym, c);
    }
    return *this;
}

DivisorExpr &DivisorExpr::operator-=(const DivisorExpr &other)
{
    for (const auto &[sym, c] : other.m_terms) {
        add(sym, -c);
    }
    return *this;
}

DivisorExpr &DivisorExpr::operator*=(const Rational &scalar)
{
    if (scalar == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[sym, c] : m_terms) {
        c *= scalar;
    }
    return *this;
}

std::string to_string(const DivisorExpr &d)
{
    if (d.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[sym, c] : d.terms()) {
        Rational mag = c;
        if (c < 0) {
            out += "-";
            mag = -c;
        } else if (!first) {
            out += "+";
        }
        if (mag != 1) {
            out += is_integral(mag) ? numerator_of(mag).str() : to_string(mag);
            out += "*";
        }
        out += sym;
        first = false;
    }
    return out;
}

bool is_valid_symbol(std::string_view name)
{
    if (name.empty()) {
        return false;
    }
    const auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && head != '_') {
        return false;
    }
    for (char ch : name) {
        const auto c = static_cast<unsigned char>(ch);
        if (!std::isalnum(c) && c != '_' && c != '\'') {
            return false;
        }
    }
    return true;
}

namespace
{

class DivisorParser
{
public:
    explicit DivisorParser(std::string_view text) : m_text(text)
    {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                m_src.push_back(c);
            }
        }
    }

    DivisorExpr parse()
    {
        if (m_src.empty()) {
            fail("empty divisor expression");
        }
        DivisorExpr out;
        bool first = true;
        while (m_pos < m_src.size()) {
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? Rational(-1) : Rational(1);
                ++m_pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            term(out, sign);
            first = false;
        }
        return out;
    }

private:
    char peek() const
    {
        return m_pos < m_src.size() ? m_src[m_pos] : '\0';
    }

    [[noreturn]] void fail(const std::string &why) const
    {
        throw Error(ErrorKind::parse_error, why + " in divisor '" + std::string(m_text) + "'");
    }

    std::optional<Rational> coefficient()
    {
        const std::size_t start = m_pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
        if (m_pos == start) {
            return std::nullopt;
        }
        if (peek() == '/') {
            ++m_pos;
            const std::size_t den_start = m_pos;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++m_pos;
            }
            if (m_pos == den_start) {
                fail("missing denominator");
            }
        }
        return parse_rational(std::string_view(m_src).substr(start, m_pos - start));
    }

    void term(DivisorExpr &out, const Rational &sign)
    {
        const auto coeff = coefficient();
        if (coeff && peek() == '*') {
            ++m_pos;
        }
        const std::size_t start = m_pos;
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\'') {
                ++m_pos;
            }
        }
        if (m_pos == start) {
            if (!coeff) {
                fail("expected a coefficient or symbol");
            }
            if (*coeff != 0) {
                fail("bare nonzero constant");
            }
            return;
        }
        const std::string sym = m_src.substr(start, m_pos - start);
        out.add(sym, sign * coeff.value_or(Rational(1)));
    }

    std::string_view m_text;
    std::string m_src;
    std::size_t m_pos = 0;
};

} // namespace

DivisorExpr parse_divisor(std::string_view text)
{
    return DivisorParser(text).parse();
}

bool is_positive_multiple(const DivisorExpr &b, const DivisorExpr &a)
{
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    if (a.terms().size() != b.terms().size()) {
        return false;
    }
    const auto &[sym0, c0] = *a.terms().begin();
    const Rational ratio = b.coeff(sym0) / c0;
    if (ratio <= 0) {
        return false;
    }
    return ratio * a == b;
}

} // namespace adjoint
