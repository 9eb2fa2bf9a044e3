#include <adjoint/riemann_roch.hpp>

#include <adjoint/chern_twist.hpp>
#include <adjoint/error.hpp>

namespace adjoint
{

namespace
{

ClassExpr sym(const char *s)
{
    return ClassExpr::symbol(s);
}

ClassExpr cls(const DivisorExpr &d)
{
    return ClassExpr::from_divisor(d);
}

Rational q(long long n, long long d = 1)
{
    return make_rational(n, d);
}

} // namespace

ChiExpression chi_expression(const DivisorExpr &d)
{
    const ClassExpr D = cls(d);
    const ClassExpr K = sym(canonical_symbol.c_str());
    NumberExpr e = q(1, 12) * intersect(D, D - K, q(2) * D - K);
    e += q(1, 12) * intersect(D, ClassExpr::c2_atom());
    e += NumberExpr::chi_O_atom();
    return {d, std::move(e)};
}

Rational chi_line_bundle(const ThreefoldProfile &p, const DivisorExpr &d)
{
    const DivisorExpr D = p.resolve(d);
    const DivisorExpr &K = p.canonical();
    return q(1, 12) * triple_eval(p, D, D - K, q(2) * D - K) + q(1, 12) * c2_pair_eval(p, D) + p.chi_O();
}

std::pair<Rational, Rational> chi_O_consistency(const ThreefoldProfile &p)
{
    return {p.chi_O(), q(-1, 24) * c2_pair_eval(p, p.canonical())};
}

Integer h0_lower_bound_from_chi(const ThreefoldProfile &p, const DivisorExpr &d)
{
    const DivisorExpr D = p.resolve(d);
    const DivisorExpr positive_part = D - p.canonical();
    if (!has_flag(p, FlagKind::ample, positive_part) && !has_flag(p, FlagKind::nef_and_big, positive_part)) {
        throw Error(ErrorKind::missing_flag, "no vanishing flag covers " + to_string(D) + ": need Ample("
                                                 + to_string(positive_part) + ") or NefAndBig("
                                                 + to_string(positive_part) + ")");
    }
    const Rational chi = chi_line_bundle(p, D);
    if (!is_integral(chi)) {
        throw Error(ErrorKind::non_integer_chi, "chi(" + to_string(D) + ") = " + to_string(chi) + " is not an integer");
    }
    return numerator_of(chi);
}

std::vector<NamedIdentity> adjoint_identities()
{
    const DivisorExpr K(canonical_symbol), A("A"), D("D");
    auto chi = [](const DivisorExpr &x) { return chi_expression(x).expr; };
    const ClassExpr k = sym("K"), a = sym("A");
    const NumberExpr chiO = NumberExpr::chi_O_atom();

    // 2/3 K.A + 1/3 A^2, read off the twisted cotangent bundle.
    const ClassExpr twist_part = cotangent_twisted_c2(3, k, a) - ClassExpr::c2_atom();

    std::vector<NamedIdentity> out;

    out.push_back({"nefbig-difference", chi(K + A) - chi(q(2) * K + A),
                   q(-1, 2) * intersect(k, k + a, k + a) + q(2) * chiO});

    out.push_back({"bs-difference", chi(K + q(2) * A) - q(2) * chi(K + A),
                   q(1, 2) * intersect(k + q(2) * a, a, a) + chiO});

    out.push_back({"adjoint-gap-difference", chi(K + q(2) * A) - chi(K + A),
                   q(1, 12) * intersect(k + q(2) * a, a, k + q(7) * a)
                       + q(1, 12) * intersect(a, ClassExpr::c2_atom())});

    out.push_back({"twisted-miyaoka-adjoint",
                   q(1, 12) * intersect(k + a, a, k + q(2) * a) - q(1, 24) * intersect(k + q(2) * a, twist_part),
                   q(1, 18) * intersect(k + q(2) * a, a, k + q(5, 4) * a)});

    out.push_back({"twisted-miyaoka-gap",
                   q(1, 12) * (intersect(k + q(2) * a, a, k + q(7) * a) - intersect(a, twist_part)),
                   q(1, 12) * (intersect(a, k + q(2) * a, k + q(19, 3) * a) + intersect(a, a, a))});

    out.push_back({"serre-duality", chi(K - D), -chi(D)});

    return out;
}

std::vector<std::pair<std::string, bool>> identity_suite()
{
    std::vector<std::pair<std::string, bool>> out;
    for (const auto &id : adjoint_identities()) {
        out.emplace_back(id.name, identity_check(id.lhs, id.rhs));
    }
    return out;
}

} // namespace adjoint
