#include <adjoint/rational.hpp>

#include <cctype>
#include <string>

#include <adjoint/error.hpp>

namespace adjoint
{

Integer floor(const Rational &q)
{
    const Integer n = numerator_of(q);
    const Integer d = denominator_of(q);
    Integer quot = n / d;
    // Integer division truncates towards zero.
    if (n < 0 && quot * d != n) {
        --quot;
    }
    return quot;
}

Integer ceil(const Rational &q)
{
    return -floor(-q);
}

std::string to_string(const Rational &q)
{
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

// cpp_int would read a leading zero as an octal prefix.
Integer decimal(std::string_view digits)
{
    while (digits.size() > 1 && digits.front() == '0') {
        digits.remove_prefix(1);
    }
    return Integer(std::string{digits});
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorKind::parse_error, "malformed rational '" + std::string(text) + "'");
    }
    const Integer d = decimal(den);
    if (d == 0) {
        throw Error(ErrorKind::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    Integer n = decimal(num);
    if (negative) {
        n = -n;
    }
    return Rational(n, d);
}

} // namespace adjoint
