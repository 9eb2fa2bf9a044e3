#include <doctest.h>

#include <adjoint/birational.hpp>
#include <adjoint/catalog.hpp>
#include <adjoint/riemann_roch.hpp>

#include "oracle.hpp"
#include "support.hpp"

using namespace adjoint;
using test_support::div;
using test_support::error_kind_of;
using test_support::q;

namespace
{

ThreefoldProfile p3()
{
    return catalog_get("P3").profile;
}

using Bundle = oracle::ProjectiveBundle;

// Pairs a profile with a projective bundle model through a basis map and
// compares every triple product and c2 pairing.
void check_against_bundle(const ThreefoldProfile &p, const Bundle &b, const std::map<std::string, Bundle::Poly> &basis)
{
    std::vector<Bundle::Poly> v;
    for (const auto &s : p.basis()) {
        v.push_back(basis.at(s));
    }
    const auto c = b.chern();
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            for (std::size_t k = 0; k < v.size(); ++k) {
                const DivisorExpr x(p.basis()[i]), y(p.basis()[j]), z(p.basis()[k]);
                CHECK(triple_eval(p, x, y, z) == b.integrate(b.mul(b.mul(v[i], v[j]), v[k])));
            }
        }
        CHECK(c2_pair_eval(p, DivisorExpr(p.basis()[i])) == b.integrate(b.mul(c[2], v[i])));
    }
    // -K = c1(T). Compare minus-canonical on every pair of basis classes.
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            CHECK(triple_eval(p, -p.canonical(), DivisorExpr(p.basis()[i]), DivisorExpr(p.basis()[j]))
                  == b.integrate(b.mul(b.mul(c[1], v[i]), v[j])));
        }
    }
}

} // namespace

TEST_SUITE("birational")
{
    TEST_CASE("point blow-up of P3")
    {
        auto [bl, map] = blow_up_point(p3(), "E");
        CHECK(validate_profile(bl).empty());
        CHECK(triple_eval(bl, div("K"), div("K"), div("K")) == q(-56));
        CHECK(triple_eval(bl, div("3H-E"), div("3H-E"), div("3H-E")) == q(26));
        CHECK(triple_eval(map.target, div("3H"), div("3H"), div("3H")) == q(27));
        CHECK(bl.canonical() == div("-4H+2E"));
        CHECK(c2_pair_eval(bl, div("E")) == q(0));
        CHECK(bl.name == "BlPoint(P3)");
        CHECK(&blow_down(map) == &map.target);
    }

    TEST_CASE("point blow-up against the P1-bundle over P2")
    {
        // Bl_p P3 = P(O + O(1)) over P2 with xi = H and h = H - E.
        const Bundle b(2, {0, 1});
        const auto bl = blow_up_point(p3(), "E").first;
        check_against_bundle(bl, b, {{"H", Bundle::xi()}, {"E", Bundle::add(Bundle::xi(), Bundle::h(), q(-1))}});
    }

    TEST_CASE("curve blow-up along a line")
    {
        auto [bl, map] = blow_up_curve(p3(), "E", 0, {{"H", q(1)}});
        CHECK(validate_profile(bl).empty());
        CHECK(triple_eval(bl, div("E"), div("E"), div("E")) == q(-2));
        CHECK(triple_eval(bl, div("-K"), div("-K"), div("-K")) == q(54));
        CHECK(c2_pair_eval(bl, div("H")) == q(7));
        CHECK(c2_pair_eval(bl, div("E")) == q(4));
        CHECK(c2_pair_eval(bl, div("K")) == q(-24));
        CHECK(map.center_kind == CenterKind::curve);
        CHECK(map.curve.genus == 0);
    }

    TEST_CASE("line blow-up against the P2-bundle over P1")
    {
        // Bl_L P3 = P(O + O + O(1)) over P1 with xi = H and fibre h = H - E.
        const Bundle b(1, {0, 0, 1});
        const auto bl = blow_up_curve(p3(), "E", 0, {{"H", q(1)}}).first;
        check_against_bundle(bl, b, {{"H", Bundle::xi()}, {"E", Bundle::add(Bundle::xi(), Bundle::h(), q(-1))}});
    }

    TEST_CASE("pencil base curve")
    {
        auto [bl, map] = blow_up_curve(p3(), "E", 76, {{"H", q(25)}});
        CHECK(validate_profile(bl).empty());
        // deg N = deg O(5)+O(5) restricted to a degree-25 curve.
        CHECK(triple_eval(bl, div("E"), div("E"), div("E")) == q(-2 * 5 * 25));
        CHECK(c2_pair_eval(bl, div("H")) == q(31));
        CHECK(c2_pair_eval(bl, div("E")) == q(100));
        CHECK(c2_pair_eval(bl, bl.canonical()) == q(-24));
    }

    TEST_CASE("blow-up errors")
    {
        CHECK(error_kind_of([] { blow_up_point(p3(), "H"); }) == ErrorKind::symbol_collision);
        CHECK(error_kind_of([] { blow_up_point(p3(), "K"); }) == ErrorKind::symbol_collision);
        CHECK(error_kind_of([] { blow_up_point(p3(), "2E"); }) == ErrorKind::invalid_argument);
        CHECK(error_kind_of([] { blow_up_curve(p3(), "E", 0, {}); }) == ErrorKind::missing_degree);
        CHECK(error_kind_of([] { blow_up_curve(p3(), "E", 0, {{"H", q(1)}, {"G", q(1)}}); })
              == ErrorKind::unknown_symbol);
        CHECK(error_kind_of([] { blow_up_curve(p3(), "E", -1, {{"H", q(1)}}); }) == ErrorKind::invalid_argument);
        auto pencil = catalog_get("Pencil5").profile;
        CHECK(error_kind_of([&] { blow_up_point(pencil, "F"); }) == ErrorKind::symbol_collision);
    }

    TEST_CASE("flag transport")
    {
        auto p = p3();
        p.add_flag(FlagKind::generically_nef_divisor, div("H"));
        p.add_flag(FlagKind::cotangent_generically_nef);
        const auto bl = blow_up_point(p, "E").first;
        CHECK_FALSE(has_flag(bl, FlagKind::ample, div("H")));
        CHECK(has_flag(bl, FlagKind::nef_and_big, div("H")));
        CHECK(has_flag(bl, FlagKind::uniruled));
        CHECK(has_flag(bl, FlagKind::irregularity_zero));
        CHECK_FALSE(has_flag(bl, FlagKind::cotangent_generically_nef));
        for (const auto &f : bl.flags()) {
            CHECK(f.kind != FlagKind::generically_nef_divisor);
        }
    }

    TEST_CASE("pull back and push forward")
    {
        auto [bl, map] = blow_up_point(p3(), "E");
        CHECK(pull_back(map, div("2H")) == div("2H"));
        CHECK(pull_back(map, div("0")).is_zero());
        CHECK(pull_back(map, div("K")) == div("-4H"));
        CHECK(push_forward(map, div("3H-E")) == div("3H"));
        CHECK(push_forward(map, div("K")) == div("-4H"));
        CHECK(error_kind_of([&] { pull_back(map, div("E")); }) == ErrorKind::unknown_symbol);
        for (int a = -3; a <= 3; ++a) {
            const DivisorExpr d("H", q(a));
            CHECK(chi_line_bundle(bl, pull_back(map, d)) == chi_line_bundle(map.target, d));
        }
    }

    TEST_CASE("step 1 invariance")
    {
        auto [bl, map] = blow_up_point(p3(), "E");
        CHECK(step1_invariance_check(map, div("3H")) == std::pair{true, true});
        CHECK(step1_invariance_check(map, div("2H")) == std::pair{true, true});
        const auto &t = map.target;
        CHECK(triple_eval(t, div("K+6H"), div("3H"), div("K+15/4*H")) == q(-3, 2));
        CHECK(triple_eval(bl, div("K+6H-2E"), div("3H-E"), div("K+15/4*H-5/4*E")) == q(-3, 2));
        CHECK(triple_eval(bl, div("K+4H-2E"), div("2H-E"), div("K+5/2*H-5/4*E")) == q(0));
        auto curve_map = blow_up_curve(p3(), "E", 0, {{"H", q(1)}}).second;
        CHECK(error_kind_of([&] { step1_invariance_check(curve_map, div("3H")); }) == ErrorKind::invalid_argument);
    }
}
