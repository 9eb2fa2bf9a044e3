#include <adjoint/error.hpp>

namespace adjoint
{

const char *error_kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::unknown_symbol:
            return "unknown-symbol";
        case ErrorKind::degree_overflow:
            return "degree-overflow";
        case ErrorKind::double_c2_atom:
            return "double-c2-atom";
        case ErrorKind::symbol_collision:
            return "symbol-collision";
        case ErrorKind::missing_degree:
            return "missing-degree";
        case ErrorKind::missing_flag:
            return "missing-flag";
        case ErrorKind::non_integer_chi:
            return "non-integer-chi";
        case ErrorKind::sign_contradiction:
            return "sign-contradiction";
        case ErrorKind::positivity_contradiction:
            return "positivity-contradiction";
        case ErrorKind::invalid_profile:
            return "invalid-profile";
        case ErrorKind::invalid_argument:
            return "invalid-argument";
        case ErrorKind::not_found:
            return "not-found";
        case ErrorKind::parse_error:
            return "parse-error";
    }
    return "unknown";
}

} // namespace adjoint
