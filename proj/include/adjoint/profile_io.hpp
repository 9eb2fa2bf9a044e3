#ifndef ADJOINT_PROFILE_IO_HPP
#define ADJOINT_PROFILE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include <adjoint/bounds.hpp>
#include <adjoint/profile.hpp>

namespace adjoint
{

inline constexpr const char *profile_format_tag = "adjoint-profile/1";

// Profile files are JSON objects:
//   format          "adjoint-profile/1"
//   name            string
//   basis           [symbol, ...]
//   triple          [{"i","j","k","value"}, ...]   i <= j <= k, zeros omitted
//   c2              ["p/q", ...]                   one per basis symbol
//   chi_O           "p/q"
//   canonical       divisor expression
//   named_divisors  {name: divisor expression}
//   flags           [{"kind", "subject"}, ...]     subject null for variety-level kinds
// All rationals are "p/q" strings; keys are emitted in sorted order.
nlohmann::json profile_to_json(const ThreefoldProfile &p);
ThreefoldProfile profile_from_json(const nlohmann::json &j);

std::string serialize_profile(const ThreefoldProfile &p);
ThreefoldProfile parse_profile(std::string_view text);

nlohmann::json violations_to_json(const std::vector<Violation> &v);
nlohmann::json flag_to_json(const PositivityFlag &f);
nlohmann::json certificate_to_json(const Certificate &c);

} // namespace adjoint

#endif
