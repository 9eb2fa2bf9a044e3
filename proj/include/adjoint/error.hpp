#ifndef ADJOINT_ERROR_HPP
#define ADJOINT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace adjoint
{

// Every failure raised by the library carries one of these kinds. The C API
// maps them one-to-one onto its status codes.
enum class ErrorKind {
    unknown_symbol,
    degree_overflow,
    double_c2_atom,
    symbol_collision,
    missing_degree,
    missing_flag,
    non_integer_chi,
    sign_contradiction,
    positivity_contradiction,
    invalid_profile,
    invalid_argument,
    not_found,
    parse_error
};

const char *error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), m_kind(kind) {}

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }

private:
    ErrorKind m_kind;
};

} // namespace adjoint

#endif
