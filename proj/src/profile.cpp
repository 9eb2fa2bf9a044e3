#include <adjoint/profile.hpp>

#include <algorithm>
#include <set>
#include <string>

#include <adjoint/error.hpp>

namespace adjoint
{

namespace
{

struct FlagName {
    FlagKind kind;
    const char *name;
};

constexpr FlagName flag_names[] = {
    {FlagKind::ample, "Ample"},
    {FlagKind::nef, "Nef"},
    {FlagKind::big, "Big"},
    {FlagKind::nef_and_big, "NefAndBig"},
    {FlagKind::pseudo_effective, "PseudoEffective"},
    {FlagKind::generically_nef_divisor, "GenericallyNefDivisor"},
    {FlagKind::numerically_trivial, "NumericallyTrivial"},
    {FlagKind::not_uniruled, "NotUniruled"},
    {FlagKind::uniruled, "Uniruled"},
    {FlagKind::irregularity_zero, "IrregularityZero"},
    {FlagKind::cotangent_generically_nef, "CotangentGenericallyNef"},
};

IndexTriple sorted(IndexTriple t)
{
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

const char *flag_kind_name(FlagKind kind) noexcept
{
    for (const auto &f : flag_names) {
        if (f.kind == kind) {
            return f.name;
        }
    }
    return "?";
}

FlagKind parse_flag_kind(std::string_view name)
{
    for (const auto &f : flag_names) {
        if (name == f.name) {
            return f.kind;
        }
    }
    throw Error(ErrorKind::parse_error, "unknown flag kind '" + std::string(name) + "'");
}

bool is_variety_level(FlagKind kind) noexcept
{
    switch (kind) {
        case FlagKind::not_uniruled:
        case FlagKind::uniruled:
        case FlagKind::irregularity_zero:
        case FlagKind::cotangent_generically_nef:
            return true;
        default:
            return false;
    }
}

std::string to_string(const PositivityFlag &f)
{
    std::string out = flag_kind_name(f.kind);
    if (f.subject) {
        out += "(" + to_string(*f.subject) + ")";
    }
    return out;
}

// ThreefoldProfile

ThreefoldProfile::ThreefoldProfile(std::vector<std::string> basis) : m_basis(std::move(basis)), m_c2(m_basis.size())
{
}

std::optional<std::size_t> ThreefoldProfile::index_of(std::string_view symbol) const
{
    const auto it = std::find(m_basis.begin(), m_basis.end(), symbol);
    if (it == m_basis.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - m_basis.begin());
}

void ThreefoldProfile::set_triple(std::size_t i, std::size_t j, std::size_t k, const Rational &v)
{
    const IndexTriple key = sorted({i, j, k});
    if (v == 0) {
        m_triple.erase(key);
    } else {
        m_triple[key] = v;
    }
}

void ThreefoldProfile::set_triple(const std::string &a, const std::string &b, const std::string &c, const Rational &v)
{
    const auto ia = index_of(a), ib = index_of(b), ic = index_of(c);
    for (const auto *s : {&a, &b, &c}) {
        if (!index_of(*s)) {
            throw Error(ErrorKind::unknown_symbol, "unknown symbol '" + *s + "'");
        }
    }
    set_triple(*ia, *ib, *ic, v);
}

void ThreefoldProfile::set_triple_raw(const IndexTriple &key, const Rational &v)
{
    m_triple[key] = v;
}

Rational ThreefoldProfile::triple_at(std::size_t i, std::size_t j, std::size_t k) const
{
    IndexTriple key = sorted({i, j, k});
    if (const auto it = m_triple.find(key); it != m_triple.end()) {
        return it->second;
    }
    while (std::next_permutation(key.begin(), key.end())) {
        if (const auto it = m_triple.find(key); it != m_triple.end()) {
            return it->second;
        }
    }
    return Rational(0);
}

void ThreefoldProfile::set_c2(std::size_t i, const Rational &v)
{
    if (m_c2.size() < m_basis.size()) {
        m_c2.resize(m_basis.size());
    }
    m_c2.at(i) = v;
}

void ThreefoldProfile::set_c2(const std::string &symbol, const Rational &v)
{
    const auto i = index_of(symbol);
    if (!i) {
        throw Error(ErrorKind::unknown_symbol, "unknown symbol '" + symbol + "'");
    }
    set_c2(*i, v);
}

void ThreefoldProfile::add_flag(PositivityFlag f)
{
    if (is_variety_level(f.kind)) {
        f.subject.reset();
    } else if (!f.subject) {
        throw Error(ErrorKind::invalid_argument, std::string("flag ") + flag_kind_name(f.kind) + " needs a subject");
    } else {
        f.subject = resolve(*f.subject);
    }
    if (std::find(m_flags.begin(), m_flags.end(), f) == m_flags.end()) {
        m_flags.push_back(std::move(f));
    }
}

void ThreefoldProfile::set_named(const std::string &name, DivisorExpr d)
{
    m_named[name] = std::move(d);
}

DivisorExpr ThreefoldProfile::resolve_symbol(const std::string &symbol) const
{
    if (has_symbol(symbol)) {
        return DivisorExpr(symbol);
    }
    if (symbol == canonical_symbol) {
        return m_canonical;
    }
    if (const auto it = m_named.find(symbol); it != m_named.end()) {
        return it->second;
    }
    throw Error(ErrorKind::unknown_symbol, "unknown symbol '" + symbol + "'");
}

DivisorExpr ThreefoldProfile::resolve(const DivisorExpr &d) const
{
    return d.substitute([this](const std::string &s) { return resolve_symbol(s); });
}

std::vector<Rational> ThreefoldProfile::coordinates(const DivisorExpr &d) const
{
    std::vector<Rational> out(m_basis.size());
    for (const auto &[sym, c] : d.terms()) {
        const auto i = index_of(sym);
        if (!i) {
            throw Error(ErrorKind::unknown_symbol, "unknown symbol '" + sym + "'");
        }
        out[*i] = c;
    }
    return out;
}

// Validation

std::vector<Violation> validate_profile(const ThreefoldProfile &p)
{
    std::vector<Violation> out;
    const auto &basis = p.basis();
    const std::size_t n = basis.size();

    std::set<std::string> seen;
    for (const auto &s : basis) {
        if (!is_valid_symbol(s)) {
            out.push_back({"structure", "invalid basis symbol '" + s + "'"});
        }
        if (s == canonical_symbol) {
            out.push_back({"structure", "basis symbol 'K' is reserved for the canonical class"});
        }
        if (!seen.insert(s).second) {
            out.push_back({"structure", "duplicate basis symbol '" + s + "'"});
        }
    }
    if (p.c2_vector().size() != n) {
        out.push_back({"structure", "c2 vector has " + std::to_string(p.c2_vector().size()) + " entries for "
                                        + std::to_string(n) + " basis symbols"});
    }

    bool indices_ok = true;
    for (const auto &[key, v] : p.triple_entries()) {
        if (key[0] >= n || key[1] >= n || key[2] >= n) {
            out.push_back({"structure", "triple entry (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + ","
                                            + std::to_string(key[2]) + ") outside the basis"});
            indices_ok = false;
        }
    }

    // Symmetry: any two stored orderings of the same index multiset must agree.
    std::map<IndexTriple, std::vector<std::pair<IndexTriple, Rational>>> by_class;
    for (const auto &[key, v] : p.triple_entries()) {
        by_class[sorted(key)].emplace_back(key, v);
    }
    for (const auto &[cls, entries] : by_class) {
        for (std::size_t a = 1; a < entries.size(); ++a) {
            if (entries[a].second != entries[0].second) {
                auto name = [&](const IndexTriple &t) {
                    auto sym = [&](std::size_t i) { return i < n ? basis[i] : std::to_string(i); };
                    return "(" + sym(t[0]) + "," + sym(t[1]) + "," + sym(t[2]) + ")";
                };
                out.push_back({"symmetry", "triple" + name(entries[0].first) + " = " + to_string(entries[0].second)
                                               + " but triple" + name(entries[a].first) + " = "
                                               + to_string(entries[a].second)});
            }
        }
    }

    bool canonical_ok = true;
    for (const auto &[sym, c] : p.canonical().terms()) {
        if (!p.has_symbol(sym)) {
            out.push_back({"structure", "canonical class uses unknown symbol '" + sym + "'"});
            canonical_ok = false;
        }
    }

    if (!is_integral(p.chi_O())) {
        out.push_back({"chi_O_integral", "chi(O) = " + to_string(p.chi_O()) + " is not an integer"});
    }

    if (canonical_ok && indices_ok && p.c2_vector().size() == n) {
        const Rational kc2 = c2_pair_eval(p, p.canonical());
        const Rational rhs = Rational(-24) * p.chi_O();
        if (kc2 != rhs) {
            out.push_back({"chiox", "chiox inconsistency: K.c2 = " + to_string(kc2) + " != -24*chi(O) = "
                                        + to_string(rhs)});
        }
    }
    return out;
}

void require_valid(const ThreefoldProfile &p)
{
    const auto v = validate_profile(p);
    if (!v.empty()) {
        throw Error(ErrorKind::invalid_profile, v.front().invariant + ": " + v.front().message);
    }
}

// Evaluation

namespace
{

struct Sparse {
    std::vector<std::pair<std::size_t, Rational>> entries;
};

Sparse sparse_coords(const ThreefoldProfile &p, const DivisorExpr &d)
{
    Sparse s;
    const DivisorExpr resolved = p.resolve(d);
    for (const auto &[sym, c] : resolved.terms()) {
        const auto i = p.index_of(sym);
        if (!i) {
            throw Error(ErrorKind::unknown_symbol, "unknown symbol '" + sym + "'");
        }
        s.entries.emplace_back(*i, c);
    }
    return s;
}

} // namespace

Rational triple_eval(const ThreefoldProfile &p, const DivisorExpr &d1, const DivisorExpr &d2, const DivisorExpr &d3)
{
    const Sparse a = sparse_coords(p, d1), b = sparse_coords(p, d2), c = sparse_coords(p, d3);
    Rational sum(0);
    for (const auto &[i, ci] : a.entries) {
        for (const auto &[j, cj] : b.entries) {
            for (const auto &[k, ck] : c.entries) {
                sum += ci * cj * ck * p.triple_at(i, j, k);
            }
        }
    }
    return sum;
}

Rational c2_pair_eval(const ThreefoldProfile &p, const DivisorExpr &d)
{
    Rational sum(0);
    for (const auto &[i, c] : sparse_coords(p, d).entries) {
        if (i < p.c2_vector().size()) {
            sum += c * p.c2_vector()[i];
        }
    }
    return sum;
}

Rational number_eval(const ThreefoldProfile &p, const NumberExpr &n, const SymbolBindings &bindings)
{
    std::map<std::string, DivisorExpr> cache;
    auto lookup = [&](const std::string &s) -> const DivisorExpr & {
        if (const auto it = cache.find(s); it != cache.end()) {
            return it->second;
        }
        const auto b = bindings.find(s);
        return cache.emplace(s, b != bindings.end() ? b->second : p.resolve_symbol(s)).first->second;
    };

    Rational sum = n.constant_term() + n.chi_O_coeff() * p.chi_O();
    for (const auto &[t, c] : n.cubic_terms()) {
        sum += c * triple_eval(p, lookup(t[0]), lookup(t[1]), lookup(t[2]));
    }
    for (const auto &[s, c] : n.c2_pairings()) {
        sum += c * c2_pair_eval(p, lookup(s));
    }
    return sum;
}

// Flags

namespace
{

bool implies(FlagKind declared, FlagKind wanted)
{
    if (declared == wanted) {
        return true;
    }
    switch (declared) {
        case FlagKind::ample:
            return wanted == FlagKind::nef || wanted == FlagKind::big || wanted == FlagKind::nef_and_big
                   || wanted == FlagKind::pseudo_effective || wanted == FlagKind::generically_nef_divisor;
        case FlagKind::nef_and_big:
            return wanted == FlagKind::nef || wanted == FlagKind::big || wanted == FlagKind::pseudo_effective
                   || wanted == FlagKind::generically_nef_divisor;
        case FlagKind::nef:
        case FlagKind::big:
        case FlagKind::numerically_trivial:
            return wanted == FlagKind::pseudo_effective || wanted == FlagKind::generically_nef_divisor
                   || (declared == FlagKind::numerically_trivial && wanted == FlagKind::nef);
        case FlagKind::pseudo_effective:
            return wanted == FlagKind::generically_nef_divisor;
        default:
            return false;
    }
}

bool subject_matches(FlagKind kind, const DivisorExpr &declared, const DivisorExpr &wanted)
{
    if (kind == FlagKind::numerically_trivial) {
        // Any rescaling of a numerically trivial class is numerically trivial.
        return is_positive_multiple(wanted, declared) || is_positive_multiple(-wanted, declared) || wanted.is_zero();
    }
    return is_positive_multiple(wanted, declared);
}

} // namespace

const PositivityFlag *find_flag(const ThreefoldProfile &p, FlagKind kind)
{
    for (const auto &f : p.flags()) {
        if (f.kind == kind) {
            return &f;
        }
    }
    return nullptr;
}

const PositivityFlag *find_flag(const ThreefoldProfile &p, FlagKind kind, const DivisorExpr &subject)
{
    const DivisorExpr wanted = p.resolve(subject);
    for (const auto &f : p.flags()) {
        if (f.subject && implies(f.kind, kind) && subject_matches(f.kind, *f.subject, wanted)) {
            return &f;
        }
    }
    return nullptr;
}

} // namespace adjoint
