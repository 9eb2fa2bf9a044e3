#ifndef ADJOINT_BOUNDS_HPP
#define ADJOINT_BOUNDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <adjoint/divisor.hpp>
#include <adjoint/graded.hpp>
#include <adjoint/profile.hpp>
#include <adjoint/rational.hpp>

namespace adjoint
{

struct PairingTest {
    Rational value;
    bool holds;
};

// L.H1.H2 >= 0 against two declared-ample classes. A negative value proves L
// is not generically nef; non-negative values are only evidence.
PairingTest generic_nef_pairing_test(const ThreefoldProfile &p, const DivisorExpr &l, const DivisorExpr &h1,
                                     const DivisorExpr &h2);

struct C2Inequality {
    Rational lhs;
    Rational rhs;
    bool holds;
    bool hypotheses_met;
};

// H.c2(X) >= -H.(2/3 K.A + 1/3 A^2), the twisted Miyaoka inequality on a
// threefold. hypotheses_met reports whether the flags license it
// (non-uniruled, A nef, K+A nef); the numbers are returned regardless.
C2Inequality miyaoka_c2_inequality(const ThreefoldProfile &p, const DivisorExpr &a, const DivisorExpr &h);

// 1/18 (K+2A).A.(K+5/4 A)
Rational bound_fukuma_h0_KA(const ThreefoldProfile &p, const DivisorExpr &a);
// 1/12 [A.(K+2A).(K+19/3 A) + A^3]
Rational bound_fukuma_gap(const ThreefoldProfile &p, const DivisorExpr &a);
// -1/2 K.(K+A)^2 + 2 chi(O)
Rational bound_nefbig(const ThreefoldProfile &p, const DivisorExpr &a);
// 1/2 (K+2A).A^2 + chi(O)
Rational bound_bs(const ThreefoldProfile &p, const DivisorExpr &a);

// The same four quantities as symbolic expressions in the free symbols K and
// A; evaluating them with A bound reproduces the numeric versions.
NumberExpr symbolic_bound_fukuma_h0_KA();
NumberExpr symbolic_bound_fukuma_gap();
NumberExpr symbolic_bound_nefbig();
NumberExpr symbolic_bound_bs();

enum class BoundRule { fukuma_ka, fukuma_gap, nefbig, bs };
BoundRule parse_bound_rule(std::string_view name);
const char *bound_rule_name(BoundRule r) noexcept;
Rational evaluate_bound(BoundRule rule, const ThreefoldProfile &p, const DivisorExpr &a);

enum class Conclusion { non_vanishing, non_vanishing_external, inconclusive };

enum class Route {
    // h0(K+A) >= 1/18 (K+2A).A.(K+5/4 A), non-uniruled X.
    fukuma_ka,
    // h0(K+2A) >= fukuma_ka + fukuma_gap, non-uniruled X.
    fukuma_ka_gap,
    // h0(K+A) >= -1/2 K.(K+A)^2 + 2 chi(O), K+A nef and big.
    nefbig,
    // h0(K+2A) >= 1/2 (K+2A).A^2 + chi(O).
    bs,
    // K+2A numerically trivial on a Fano threefold.
    fano_trivial,
    // Conclusion delegated to a cited theorem.
    external,
    none
};

enum class Citation { ka00_thm31, ch02_thm42, basepointfree, fano_trivial };

const char *conclusion_name(Conclusion c) noexcept;
const char *route_name(Route r) noexcept;
const char *citation_name(Citation c) noexcept;

struct Certificate {
    Conclusion conclusion = Conclusion::inconclusive;
    Route route = Route::none;
    std::optional<Rational> rational_bound;
    std::optional<Integer> integer_bound;
    std::vector<PositivityFlag> hypotheses_used;
    std::vector<Citation> citations;
};

// Certifies H^0(K+A) != 0. Requires Ample(A). Decision order: non-uniruled,
// nef-not-big, irregular uniruled, then -K generically nef with K+A nef and
// big; otherwise inconclusive.
Certificate certify_h0_adjoint(const ThreefoldProfile &p, const DivisorExpr &a);

// Certifies H^0(K+2A) != 0. Requires Ample(A) and Nef(K+2A).
Certificate certify_h0_bs(const ThreefoldProfile &p, const DivisorExpr &a);

} // namespace adjoint

#endif
