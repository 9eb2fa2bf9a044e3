#include <adjoint/catalog.hpp>

#include <charconv>
#include <string>

#include <adjoint/birational.hpp>
#include <adjoint/error.hpp>

namespace adjoint
{

namespace
{

Rational q(long long n, long long d = 1)
{
    return make_rational(n, d);
}

const DivisorExpr H("H");

CatalogEntry p3()
{
    ThreefoldProfile p({"H"});
    p.name = "P3";
    p.set_triple(0, 0, 0, q(1));
    p.set_c2(0, q(6));
    p.set_canonical(DivisorExpr("H", q(-4)));
    p.set_chi_O(q(1));
    p.add_flag(FlagKind::ample, H);
    p.add_flag(FlagKind::uniruled);
    p.add_flag(FlagKind::irregularity_zero);

    CatalogEntry e;
    e.name = "P3";
    e.profile = std::move(p);
    e.provenance = "Projective 3-space: H^3 = 1, K = -4H, c(P3) = (1+H)^4 so c2.H = 6, chi(O) = 1.";
    e.expected_values = {
        {"chi(O(1))", q(4)},
        {"chi(O(2))", q(10)},
        {"K^3", q(-64)},
        {"nefbig bound at A = 5H", q(4)},
        {"bs bound at A = 3H", q(10)},
    };
    return e;
}

CatalogEntry bl_p3()
{
    auto [profile, map] = blow_up_point(p3().profile, "E");
    profile.name = "BlP3";
    // aH - bE is ample on the blow-up of a point iff a > b > 0.
    profile.add_flag(FlagKind::ample, DivisorExpr{{"H", q(2)}, {"E", q(-1)}});
    CatalogEntry e{"BlP3", std::move(profile),
                   "Blow-up of P3 at a point: E^3 = 1, K = -4H + 2E, E.c2 = 0.",
                   {{"K^3", q(-56)}, {"(3H-E)^3", q(26)}, {"chi(O)", q(1)}}};
    return e;
}

CatalogEntry bl_line_p3()
{
    auto [profile, map] = blow_up_curve(p3().profile, "E", 0, {{"H", q(1)}});
    profile.name = "BlLineP3";
    profile.add_flag(FlagKind::nef, DivisorExpr{{"H", q(1)}, {"E", q(-1)}});
    profile.add_flag(FlagKind::ample, DivisorExpr{{"H", q(2)}, {"E", q(-1)}});
    CatalogEntry e{"BlLineP3", std::move(profile),
                   "Blow-up of P3 along a line (g = 0, H.C = 1): E^3 = -2, K = -4H + E, H.c2 = 7, E.c2 = 4; "
                   "a P2-bundle over P1 with (-K)^3 = 54.",
                   {{"(-K)^3", q(54)}, {"E^3", q(-2)}, {"H.c2", q(7)}, {"E.c2", q(4)}}};
    return e;
}

CatalogEntry pencil5()
{
    // Base curve of a generic pencil of quintic surfaces: the complete
    // intersection of two quintics, degree 25, K_C = (5+5-4)H|_C so
    // 2g - 2 = 6*25 and g = 76.
    auto [profile, map] = blow_up_curve(p3().profile, "E", 76, {{"H", q(25)}});
    profile.name = "Pencil5";
    const DivisorExpr fibre{{"H", q(5)}, {"E", q(-1)}};
    profile.set_named("F", fibre);
    profile.add_flag(FlagKind::nef, fibre);
    CatalogEntry e{"Pencil5", std::move(profile),
                   "P3 blown up along the smooth base curve (g = 76, H.C = 25) of a generic pencil of quintic "
                   "surfaces; F = 5H - E is the fibre of the induced map to P1, K.F.H = K_F.H|_F = 5.",
                   {{"E^3", q(-250)}, {"K.F.H", q(5)}, {"K.F^2", q(0)}, {"F^3", q(0)}, {"F^2.H", q(0)}}};
    return e;
}

} // namespace

CatalogEntry catalog_hypersurface(int d)
{
    if (d < 1) {
        throw Error(ErrorKind::invalid_argument, "hypersurface degree must be positive");
    }
    // c(X) = (1+H)^5 / (1+dH) truncated: c1 = (5-d)H, c2 = (d^2 - 5d + 10)H^2.
    const Rational deg(d);
    const Rational c2h = deg * (deg * deg - 5 * deg + 10);
    ThreefoldProfile p({"H"});
    p.name = "hypersurface(" + std::to_string(d) + ")";
    p.set_triple(0, 0, 0, deg);
    p.set_c2(0, c2h);
    p.set_canonical(DivisorExpr("H", deg - 5));
    p.set_chi_O(q(-1, 24) * (deg - 5) * c2h);
    p.add_flag(FlagKind::ample, H);
    if (d <= 4) {
        p.add_flag(FlagKind::uniruled);
    } else {
        p.add_flag(FlagKind::not_uniruled);
    }
    p.add_flag(FlagKind::irregularity_zero);

    CatalogEntry e;
    e.name = p.name;
    e.profile = std::move(p);
    e.provenance = "Smooth degree-" + std::to_string(d)
                   + " hypersurface in P4: H^3 = d, K = (d-5)H, c2.H = d(d^2-5d+10), chi(O) = -K.c2/24.";
    e.expected_values = {{"H^3", deg}, {"c2.H", c2h}, {"chi(O)", e.profile.chi_O()}};
    return e;
}

CatalogEntry catalog_get(std::string_view name)
{
    if (name == "P3") {
        return p3();
    }
    if (name == "Q5") {
        CatalogEntry e = catalog_hypersurface(5);
        e.expected_values.push_back({"h0(O(1))", q(5)});
        return e;
    }
    if (name == "BlP3") {
        return bl_p3();
    }
    if (name == "BlLineP3") {
        return bl_line_p3();
    }
    if (name == "Pencil5") {
        return pencil5();
    }
    constexpr std::string_view prefix = "hypersurface(";
    if (name.starts_with(prefix) && name.ends_with(")")) {
        const auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        int d = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && d >= 1) {
            return catalog_hypersurface(d);
        }
    }
    throw Error(ErrorKind::not_found, "unknown catalog entry '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names()
{
    return {"P3", "Q5", "hypersurface(d)", "BlP3", "BlLineP3", "Pencil5"};
}

std::vector<Rational> default_eps_scan()
{
    std::vector<Rational> out;
    Rational eps = q(1, 2);
    for (int i = 0; i < 20; ++i) {
        out.push_back(eps);
        eps /= 2;
    }
    return out;
}

Witness bad_anticanonical_witness(const ThreefoldProfile &p, std::span<const Rational> eps_list)
{
    const DivisorExpr fibre = p.resolve_symbol("F");
    const DivisorExpr h = p.resolve_symbol("H");
    const DivisorExpr &k = p.canonical();
    for (const auto &eps : eps_list) {
        if (eps <= 0) {
            continue;
        }
        const DivisorExpr a = fibre + eps * h;
        const Rational value = triple_eval(p, k, a, a);
        if (value > 0) {
            // F + eps H is ample for every eps > 0 on the pencil blow-up.
            ThreefoldProfile with_ample = p;
            with_ample.add_flag(FlagKind::ample, a);
            return {eps, value, generic_nef_pairing_test(with_ample, -k, a, a)};
        }
    }
    throw Error(ErrorKind::not_found, "no eps in the scan gives K.(F + eps H)^2 > 0");
}

} // namespace adjoint
