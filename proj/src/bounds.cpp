#include <adjoint/bounds.hpp>

#include <algorithm>
#include <string>

#include <adjoint/chern_twist.hpp>
#include <adjoint/error.hpp>

namespace adjoint
{

namespace
{

Rational q(long long n, long long d = 1)
{
    return make_rational(n, d);
}

const PositivityFlag &require_flag(const ThreefoldProfile &p, FlagKind kind, const DivisorExpr &subject)
{
    const PositivityFlag *f = find_flag(p, kind, subject);
    if (!f) {
        throw Error(ErrorKind::missing_flag, std::string("missing flag ") + flag_kind_name(kind) + "("
                                                 + to_string(p.resolve(subject)) + ")");
    }
    return *f;
}

// NotUniruled, or equivalently a pseudo-effective canonical class.
const PositivityFlag *non_uniruled_flag(const ThreefoldProfile &p)
{
    if (const auto *f = find_flag(p, FlagKind::not_uniruled)) {
        return f;
    }
    return find_flag(p, FlagKind::pseudo_effective, p.canonical());
}

const PositivityFlag *generically_nef_anticanonical(const ThreefoldProfile &p)
{
    if (const auto *f = find_flag(p, FlagKind::pseudo_effective, -p.canonical())) {
        return f;
    }
    return find_flag(p, FlagKind::generically_nef_divisor, -p.canonical());
}

Rational cube(const ThreefoldProfile &p, const DivisorExpr &d)
{
    return triple_eval(p, d, d, d);
}

} // namespace

PairingTest generic_nef_pairing_test(const ThreefoldProfile &p, const DivisorExpr &l, const DivisorExpr &h1,
                                     const DivisorExpr &h2)
{
    require_flag(p, FlagKind::ample, h1);
    require_flag(p, FlagKind::ample, h2);
    const Rational v = triple_eval(p, p.resolve(l), p.resolve(h1), p.resolve(h2));
    return {v, v >= 0};
}

C2Inequality miyaoka_c2_inequality(const ThreefoldProfile &p, const DivisorExpr &a, const DivisorExpr &h)
{
    const DivisorExpr A = p.resolve(a);
    const DivisorExpr H = p.resolve(h);
    const ClassExpr k_sym = ClassExpr::symbol("K"), a_sym = ClassExpr::symbol("A"), h_sym = ClassExpr::symbol("H");

    // H.c2(Omega<A/3>) = H.c2 + H.(2/3 K.A + 1/3 A^2); the inequality reads
    // H.c2 >= -(H.c2(Omega<A/3>) - H.c2).
    const ClassExpr correction = cotangent_twisted_c2(3, k_sym, a_sym) - ClassExpr::c2_atom();
    const NumberExpr rhs_expr = -intersect(h_sym, correction);
    const SymbolBindings bind = {{"K", p.canonical()}, {"A", A}, {"H", H}};

    C2Inequality out;
    out.lhs = c2_pair_eval(p, H);
    out.rhs = number_eval(p, rhs_expr, bind);
    out.holds = out.lhs >= out.rhs;
    out.hypotheses_met = non_uniruled_flag(p) != nullptr && has_flag(p, FlagKind::nef, A)
                         && has_flag(p, FlagKind::nef, p.canonical() + A);
    return out;
}

Rational bound_fukuma_h0_KA(const ThreefoldProfile &p, const DivisorExpr &a)
{
    const DivisorExpr A = p.resolve(a);
    const DivisorExpr &K = p.canonical();
    return q(1, 18) * triple_eval(p, K + q(2) * A, A, K + q(5, 4) * A);
}

Rational bound_fukuma_gap(const ThreefoldProfile &p, const DivisorExpr &a)
{
    const DivisorExpr A = p.resolve(a);
    const DivisorExpr &K = p.canonical();
    return q(1, 12) * (triple_eval(p, A, K + q(2) * A, K + q(19, 3) * A) + cube(p, A));
}

Rational bound_nefbig(const ThreefoldProfile &p, const DivisorExpr &a)
{
    const DivisorExpr A = p.resolve(a);
    const DivisorExpr &K = p.canonical();
    return q(-1, 2) * triple_eval(p, K, K + A, K + A) + q(2) * p.chi_O();
}

Rational bound_bs(const ThreefoldProfile &p, const DivisorExpr &a)
{
    const DivisorExpr A = p.resolve(a);
    const DivisorExpr &K = p.canonical();
    return q(1, 2) * triple_eval(p, K + q(2) * A, A, A) + p.chi_O();
}

NumberExpr symbolic_bound_fukuma_h0_KA()
{
    const auto k = ClassExpr::symbol("K"), a = ClassExpr::symbol("A");
    return q(1, 18) * intersect(k + q(2) * a, a, k + q(5, 4) * a);
}

NumberExpr symbolic_bound_fukuma_gap()
{
    const auto k = ClassExpr::symbol("K"), a = ClassExpr::symbol("A");
    return q(1, 12) * (intersect(a, k + q(2) * a, k + q(19, 3) * a) + intersect(a, a, a));
}

NumberExpr symbolic_bound_nefbig()
{
    const auto k = ClassExpr::symbol("K"), a = ClassExpr::symbol("A");
    return q(-1, 2) * intersect(k, k + a, k + a) + q(2) * NumberExpr::chi_O_atom();
}

NumberExpr symbolic_bound_bs()
{
    const auto k = ClassExpr::symbol("K"), a = ClassExpr::symbol("A");
    return q(1, 2) * intersect(k + q(2) * a, a, a) + NumberExpr::chi_O_atom();
}

BoundRule parse_bound_rule(std::string_view name)
{
    if (name == "fukuma-ka") {
        return BoundRule::fukuma_ka;
    }
    if (name == "fukuma-gap") {
        return BoundRule::fukuma_gap;
    }
    if (name == "nefbig") {
        return BoundRule::nefbig;
    }
    if (name == "bs") {
        return BoundRule::bs;
    }
    throw Error(ErrorKind::parse_error, "unknown bound rule '" + std::string(name) + "'");
}

const char *bound_rule_name(BoundRule r) noexcept
{
    switch (r) {
        case BoundRule::fukuma_ka:
            return "fukuma-ka";
        case BoundRule::fukuma_gap:
            return "fukuma-gap";
        case BoundRule::nefbig:
            return "nefbig";
        case BoundRule::bs:
            return "bs";
    }
    return "?";
}

Rational evaluate_bound(BoundRule rule, const ThreefoldProfile &p, const DivisorExpr &a)
{
    switch (rule) {
        case BoundRule::fukuma_ka:
            return bound_fukuma_h0_KA(p, a);
        case BoundRule::fukuma_gap:
            return bound_fukuma_gap(p, a);
        case BoundRule::nefbig:
            return bound_nefbig(p, a);
        case BoundRule::bs:
            return bound_bs(p, a);
    }
    throw Error(ErrorKind::invalid_argument, "bad bound rule");
}

const char *conclusion_name(Conclusion c) noexcept
{
    switch (c) {
        case Conclusion::non_vanishing:
            return "NonVanishing";
        case Conclusion::non_vanishing_external:
            return "NonVanishingExternal";
        case Conclusion::inconclusive:
            return "Inconclusive";
    }
    return "?";
}

const char *route_name(Route r) noexcept
{
    switch (r) {
        case Route::fukuma_ka:
            return "fukuma-ka";
        case Route::fukuma_ka_gap:
            return "fukuma-ka+gap";
        case Route::nefbig:
            return "nefbig";
        case Route::bs:
            return "bs";
        case Route::fano_trivial:
            return "fano-trivial";
        case Route::external:
            return "external";
        case Route::none:
            return "none";
    }
    return "?";
}

const char *citation_name(Citation c) noexcept
{
    switch (c) {
        case Citation::ka00_thm31:
            return "KA00_THM31";
        case Citation::ch02_thm42:
            return "CH02_THM42";
        case Citation::basepointfree:
            return "BASEPOINTFREE";
        case Citation::fano_trivial:
            return "FANO_TRIVIAL";
    }
    return "?";
}

namespace
{

// One flag can discharge several hypotheses; list it once.
std::vector<PositivityFlag> distinct(std::vector<PositivityFlag> used)
{
    std::vector<PositivityFlag> out;
    for (auto &f : used) {
        if (std::find(out.begin(), out.end(), f) == out.end()) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

Certificate with_bound(Route route, const Rational &bound, std::vector<PositivityFlag> used)
{
    Certificate c;
    c.conclusion = Conclusion::non_vanishing;
    c.route = route;
    c.rational_bound = bound;
    c.integer_bound = ceil(bound);
    c.hypotheses_used = distinct(std::move(used));
    return c;
}

Certificate external(Citation cite, std::vector<PositivityFlag> used)
{
    Certificate c;
    c.conclusion = Conclusion::non_vanishing_external;
    c.route = Route::external;
    c.citations.push_back(cite);
    c.hypotheses_used = distinct(std::move(used));
    return c;
}

void require_chi_O_at_least_one(const ThreefoldProfile &p)
{
    if (p.chi_O() < 1) {
        throw Error(ErrorKind::sign_contradiction, "declared regular uniruled threefold has chi(O) = "
                                                       + to_string(p.chi_O()) + " < 1");
    }
}

} // namespace

Certificate certify_h0_adjoint(const ThreefoldProfile &p, const DivisorExpr &a)
{
    require_valid(p);
    const DivisorExpr A = p.resolve(a);
    const DivisorExpr &K = p.canonical();
    const DivisorExpr adjoint = K + A;
    const PositivityFlag ample = require_flag(p, FlagKind::ample, A);

    if (const auto *nu = non_uniruled_flag(p)) {
        const Rational b = bound_fukuma_h0_KA(p, A);
        if (b <= 0) {
            throw Error(ErrorKind::sign_contradiction, "non-uniruled with A ample forces 1/18 (K+2A).A.(K+5/4 A) > 0, got "
                                                           + to_string(b));
        }
        return with_bound(Route::fukuma_ka, b, {ample, *nu});
    }

    const PositivityFlag *nef = find_flag(p, FlagKind::nef, adjoint);
    const Rational adjoint_cube = cube(p, adjoint);
    if (nef && adjoint_cube < 0) {
        throw Error(ErrorKind::positivity_contradiction, "K+A declared nef but (K+A)^3 = " + to_string(adjoint_cube));
    }
    if (nef && adjoint_cube == 0) {
        // A nef divisor is big exactly when its top self-intersection is positive.
        if (has_flag(p, FlagKind::big, adjoint)) {
            throw Error(ErrorKind::positivity_contradiction, "K+A declared nef and big but (K+A)^3 = 0");
        }
        return external(Citation::ka00_thm31, {ample, *nef});
    }

    const PositivityFlag *uniruled = find_flag(p, FlagKind::uniruled);
    const PositivityFlag *regular = find_flag(p, FlagKind::irregularity_zero);
    if (uniruled && !regular && nef) {
        return external(Citation::ch02_thm42, {ample, *nef, *uniruled});
    }

    const PositivityFlag *anti = generically_nef_anticanonical(p);
    const PositivityFlag *nefbig = find_flag(p, FlagKind::nef_and_big, adjoint);
    if (uniruled && regular && anti && nefbig) {
        if (adjoint_cube <= 0) {
            throw Error(ErrorKind::positivity_contradiction, "K+A declared nef and big but (K+A)^3 = "
                                                                 + to_string(adjoint_cube));
        }
        require_chi_O_at_least_one(p);
        const Rational pairing = triple_eval(p, -K, adjoint, adjoint);
        if (pairing < 0) {
            throw Error(ErrorKind::sign_contradiction, "-K declared generically nef but -K.(K+A)^2 = "
                                                           + to_string(pairing));
        }
        return with_bound(Route::nefbig, bound_nefbig(p, A), {ample, *uniruled, *regular, *anti, *nefbig});
    }

    Certificate c;
    c.hypotheses_used = {ample};
    return c;
}

Certificate certify_h0_bs(const ThreefoldProfile &p, const DivisorExpr &a)
{
    require_valid(p);
    const DivisorExpr A = p.resolve(a);
    const DivisorExpr &K = p.canonical();
    const DivisorExpr adjoint = K + q(2) * A;
    const PositivityFlag ample = require_flag(p, FlagKind::ample, A);
    const PositivityFlag nef = require_flag(p, FlagKind::nef, adjoint);

    if (const auto *trivial = find_flag(p, FlagKind::numerically_trivial, adjoint)) {
        const std::size_t n = p.basis().size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const DivisorExpr bi(p.basis()[i]), bj(p.basis()[j]);
                if (triple_eval(p, adjoint, bi, bj) != 0) {
                    throw Error(ErrorKind::positivity_contradiction,
                                "K+2A declared numerically trivial but (K+2A)." + p.basis()[i] + "." + p.basis()[j]
                                    + " != 0");
                }
            }
        }
        if (c2_pair_eval(p, adjoint) != 0) {
            throw Error(ErrorKind::positivity_contradiction, "K+2A declared numerically trivial but (K+2A).c2 != 0");
        }
        Certificate c;
        c.conclusion = Conclusion::non_vanishing;
        c.route = Route::fano_trivial;
        c.citations.push_back(Citation::fano_trivial);
        c.hypotheses_used = distinct({ample, *trivial});
        return c;
    }

    if (const auto *nu = non_uniruled_flag(p)) {
        const Rational first = bound_fukuma_h0_KA(p, A);
        const Rational gap = bound_fukuma_gap(p, A);
        if (first <= 0 || gap <= 0) {
            throw Error(ErrorKind::sign_contradiction, "non-uniruled with A ample forces both adjoint bounds positive, got "
                                                           + to_string(first) + " and " + to_string(gap));
        }
        return with_bound(Route::fukuma_ka_gap, first + gap, {ample, nef, *nu});
    }

    const PositivityFlag *uniruled = find_flag(p, FlagKind::uniruled);
    const PositivityFlag *regular = find_flag(p, FlagKind::irregularity_zero);
    if (uniruled && !regular) {
        return external(Citation::ch02_thm42, {ample, nef, *uniruled});
    }
    if (uniruled && regular) {
        const Rational positivity = triple_eval(p, adjoint, A, A);
        if (positivity <= 0) {
            throw Error(ErrorKind::positivity_contradiction,
                        "K+2A nef and not numerically trivial forces (K+2A).A^2 > 0, got " + to_string(positivity));
        }
        require_chi_O_at_least_one(p);
        Certificate c = with_bound(Route::bs, bound_bs(p, A), {ample, nef, *uniruled, *regular});
        c.citations.push_back(Citation::basepointfree);
        return c;
    }

    Certificate c;
    c.hypotheses_used = distinct({ample, nef});
    return c;
}

} // namespace adjoint
