#ifndef ADJOINT_CATALOG_HPP
#define ADJOINT_CATALOG_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <adjoint/bounds.hpp>
#include <adjoint/profile.hpp>
#include <adjoint/rational.hpp>

namespace adjoint
{

struct ExpectedValue {
    std::string description;
    Rational value;
};

struct CatalogEntry {
    std::string name;
    ThreefoldProfile profile;
    std::string provenance;
    std::vector<ExpectedValue> expected_values;
};

// Known names: "P3", "hypersurface(d)" for d >= 1, "Q5" (= hypersurface(5)),
// "BlP3", "BlLineP3", "Pencil5". Throws not_found.
CatalogEntry catalog_get(std::string_view name);
std::vector<std::string> catalog_names();

CatalogEntry catalog_hypersurface(int degree);

struct Witness {
    Rational eps;
    // K.(F + eps H)^2
    Rational value;
    // -K.(F + eps H)^2 against the ample class F + eps H.
    PairingTest anticanonical_pairing;
};

// Halving scan 1/2, 1/4, ..., 1/2^20.
std::vector<Rational> default_eps_scan();

// Looks for eps > 0 with K.(F + eps H)^2 > 0 on a profile carrying the named
// divisors F (pencil fibre) and H. Every F + eps H with eps > 0 is declared
// ample for the pairing test. Throws not_found if the scan has no witness.
Witness bad_anticanonical_witness(const ThreefoldProfile &p, std::span<const Rational> eps_list);
inline Witness bad_anticanonical_witness(const ThreefoldProfile &p)
{
    const auto eps = default_eps_scan();
    return bad_anticanonical_witness(p, eps);
}

} // namespace adjoint

#endif
