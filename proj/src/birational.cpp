#include <adjoint/birational.hpp>

#include <adjoint/error.hpp>
#include <adjoint/graded.hpp>

namespace adjoint
{

namespace
{

void check_new_symbol(const ThreefoldProfile &p, const std::string &s)
{
    if (!is_valid_symbol(s)) {
        throw Error(ErrorKind::invalid_argument, "invalid exceptional symbol '" + s + "'");
    }
    if (p.has_symbol(s) || s == canonical_symbol || p.named_divisors().count(s) != 0) {
        throw Error(ErrorKind::symbol_collision, "symbol '" + s + "' already in use");
    }
}

// Copies everything that pulls back verbatim: basis, triples among pulled
// back classes, c2 pairings, chi(O), named divisors and the flags that are
// stable under pull-back by a birational morphism.
ThreefoldProfile pulled_back_skeleton(const ThreefoldProfile &p, const std::string &e, const std::string &tag)
{
    std::vector<std::string> basis = p.basis();
    basis.push_back(e);
    ThreefoldProfile out(std::move(basis));
    out.name = tag + "(" + p.name + ")";
    for (const auto &[key, v] : p.triple_entries()) {
        out.set_triple_raw(key, v);
    }
    for (std::size_t i = 0; i < p.c2_vector().size(); ++i) {
        out.set_c2(i, p.c2_vector()[i]);
    }
    out.set_chi_O(p.chi_O());
    for (const auto &[name, d] : p.named_divisors()) {
        out.set_named(name, d);
    }
    return out;
}

void transport_flags(const ThreefoldProfile &p, ThreefoldProfile &out)
{
    for (const auto &f : p.flags()) {
        switch (f.kind) {
            case FlagKind::ample:
                // f*A is nef and big but never ample on the blow-up.
                out.add_flag(FlagKind::nef_and_big, *f.subject);
                break;
            case FlagKind::nef:
            case FlagKind::big:
            case FlagKind::nef_and_big:
            case FlagKind::pseudo_effective:
            case FlagKind::numerically_trivial:
                out.add_flag(f);
                break;
            case FlagKind::not_uniruled:
            case FlagKind::uniruled:
            case FlagKind::irregularity_zero:
                out.add_flag(f.kind);
                break;
            case FlagKind::generically_nef_divisor:
            case FlagKind::cotangent_generically_nef:
                break;
        }
    }
}

} // namespace

std::pair<ThreefoldProfile, BlowupMap> blow_up_point(const ThreefoldProfile &p, const std::string &new_symbol)
{
    check_new_symbol(p, new_symbol);
    ThreefoldProfile out = pulled_back_skeleton(p, new_symbol, "BlPoint");
    const std::size_t e = p.basis().size();
    out.set_triple(e, e, e, Rational(1));
    out.set_c2(e, Rational(0));
    out.set_canonical(p.canonical() + DivisorExpr(new_symbol, Rational(2)));
    transport_flags(p, out);

    BlowupMap m{out, p, new_symbol, CenterKind::point, {}};
    return {std::move(out), std::move(m)};
}

std::pair<ThreefoldProfile, BlowupMap> blow_up_curve(const ThreefoldProfile &p, const std::string &new_symbol, long genus,
                                                     const std::map<std::string, Rational> &degrees)
{
    check_new_symbol(p, new_symbol);
    if (genus < 0) {
        throw Error(ErrorKind::invalid_argument, "curve genus must be non-negative");
    }
    for (const auto &[sym, v] : degrees) {
        if (!p.has_symbol(sym)) {
            throw Error(ErrorKind::unknown_symbol, "curve degree given for unknown symbol '" + sym + "'");
        }
    }
    std::vector<Rational> deg(p.basis().size());
    for (std::size_t i = 0; i < p.basis().size(); ++i) {
        const auto it = degrees.find(p.basis()[i]);
        if (it == degrees.end()) {
            throw Error(ErrorKind::missing_degree, "no curve degree for basis symbol '" + p.basis()[i] + "'");
        }
        deg[i] = it->second;
    }
    Rational k_dot_c(0);
    for (std::size_t i = 0; i < deg.size(); ++i) {
        k_dot_c += p.canonical().coeff(p.basis()[i]) * deg[i];
    }
    // Adjunction: deg N_{C/X} = 2g - 2 - K.C.
    const Rational normal_degree = Rational(2 * genus - 2) - k_dot_c;

    ThreefoldProfile out = pulled_back_skeleton(p, new_symbol, "BlCurve");
    const std::size_t e = p.basis().size();
    for (std::size_t i = 0; i < deg.size(); ++i) {
        out.set_triple(i, e, e, -deg[i]);
        out.set_c2(i, p.c2_vector().at(i) + deg[i]);
    }
    out.set_triple(e, e, e, -normal_degree);
    out.set_c2(e, -k_dot_c);
    out.set_canonical(p.canonical() + DivisorExpr(new_symbol));
    transport_flags(p, out);

    BlowupMap m{out, p, new_symbol, CenterKind::curve, CurveCenter{genus, degrees}};
    return {std::move(out), std::move(m)};
}

DivisorExpr pull_back(const BlowupMap &m, const DivisorExpr &d)
{
    const DivisorExpr over_target = m.target.resolve(d);
    m.target.coordinates(over_target);
    return over_target;
}

DivisorExpr push_forward(const BlowupMap &m, const DivisorExpr &d)
{
    DivisorExpr out = m.source.resolve(d);
    out.add(m.exceptional_symbol, -out.coeff(m.exceptional_symbol));
    return out;
}

std::pair<bool, bool> step1_invariance_check(const BlowupMap &m, const DivisorExpr &a_target)
{
    if (m.center_kind != CenterKind::point) {
        throw Error(ErrorKind::invalid_argument, "the adjoint invariance check applies to point blow-ups");
    }
    const DivisorExpr a_tgt = m.target.resolve(a_target);
    const DivisorExpr a_src = pull_back(m, a_tgt) - DivisorExpr(m.exceptional_symbol);

    auto first = [](const ThreefoldProfile &p, const DivisorExpr &a) {
        const DivisorExpr &k = p.canonical();
        return triple_eval(p, k + Rational(2) * a, a, k + make_rational(5, 4) * a);
    };
    auto second = [](const ThreefoldProfile &p, const DivisorExpr &a) {
        const DivisorExpr &k = p.canonical();
        return triple_eval(p, a, k + Rational(2) * a, k + make_rational(19, 3) * a);
    };
    return {first(m.source, a_src) == first(m.target, a_tgt), second(m.source, a_src) == second(m.target, a_tgt)};
}

} // namespace adjoint
