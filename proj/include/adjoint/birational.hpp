#ifndef ADJOINT_BIRATIONAL_HPP
#define ADJOINT_BIRATIONAL_HPP

#include <map>
#include <string>
#include <utility>

#include <adjoint/divisor.hpp>
#include <adjoint/profile.hpp>
#include <adjoint/rational.hpp>

namespace adjoint
{

enum class CenterKind { point, curve };

struct CurveCenter {
    long genus = 0;
    // D.C for every divisor D of the target basis.
    std::map<std::string, Rational> degrees;
};

// f : source -> target, the blow-up of target along a point or smooth curve
// with exceptional divisor `exceptional_symbol` on source.
struct BlowupMap {
    ThreefoldProfile source;
    ThreefoldProfile target;
    std::string exceptional_symbol;
    CenterKind center_kind = CenterKind::point;
    CurveCenter curve;
};

// E^3 = 1, f*D.E = 0 in every mixed product, K' = f*K + 2E, E.c2 = 0.
std::pair<ThreefoldProfile, BlowupMap> blow_up_point(const ThreefoldProfile &p, const std::string &new_symbol);

// f*D.f*D'.E = 0, f*D.E^2 = -D.C, E^3 = -(2g - 2 - K.C), K' = f*K + E,
// f*D.c2' = D.c2 + D.C, E.c2' = -K.C.
std::pair<ThreefoldProfile, BlowupMap> blow_up_curve(const ThreefoldProfile &p, const std::string &new_symbol, long genus,
                                                     const std::map<std::string, Rational> &degrees);

// Same coefficients over the source basis.
DivisorExpr pull_back(const BlowupMap &m, const DivisorExpr &d);
// Drops the exceptional coefficient.
DivisorExpr push_forward(const BlowupMap &m, const DivisorExpr &d);

// Blow-down reading of a stored map.
inline const ThreefoldProfile &blow_down(const BlowupMap &m)
{
    return m.target;
}

// With A = f*A' - E on the source, compares (K+2A).A.(K+5/4 A) and
// A.(K+2A).(K+19/3 A) across the map. Point blow-ups only.
std::pair<bool, bool> step1_invariance_check(const BlowupMap &m, const DivisorExpr &a_target);

} // namespace adjoint

#endif
