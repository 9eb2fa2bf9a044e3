#ifndef ADJOINT_PROFILE_HPP
#define ADJOINT_PROFILE_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <adjoint/divisor.hpp>
#include <adjoint/graded.hpp>
#include <adjoint/rational.hpp>

namespace adjoint
{

enum class FlagKind {
    ample,
    nef,
    big,
    nef_and_big,
    pseudo_effective,
    generically_nef_divisor,
    numerically_trivial,
    not_uniruled,
    uniruled,
    irregularity_zero,
    cotangent_generically_nef
};

// "Ample", "NefAndBig", ... as used in profile files.
const char *flag_kind_name(FlagKind kind) noexcept;
FlagKind parse_flag_kind(std::string_view name);
// Variety-level kinds carry no subject.
bool is_variety_level(FlagKind kind) noexcept;

// A trusted positivity assertion. Subjects are stored over the profile basis.
struct PositivityFlag {
    FlagKind kind;
    std::optional<DivisorExpr> subject;

    friend bool operator==(const PositivityFlag &, const PositivityFlag &) = default;
};

std::string to_string(const PositivityFlag &f);

using IndexTriple = std::array<std::size_t, 3>;

// The numerical data of a smooth projective threefold: a basis of N^1(X)_Q,
// the triple intersection form on it, the pairings c2(X).b_i, chi(O_X), the
// canonical class and declared positivity flags.
class ThreefoldProfile
{
public:
    ThreefoldProfile() = default;
    explicit ThreefoldProfile(std::vector<std::string> basis);

    std::string name;

    const std::vector<std::string> &basis() const noexcept
    {
        return m_basis;
    }
    std::optional<std::size_t> index_of(std::string_view symbol) const;
    bool has_symbol(std::string_view symbol) const
    {
        return index_of(symbol).has_value();
    }

    // Stores the value on the sorted index triple.
    void set_triple(std::size_t i, std::size_t j, std::size_t k, const Rational &v);
    void set_triple(const std::string &a, const std::string &b, const std::string &c, const Rational &v);
    // Stores the value exactly under the given index order. Used by the file
    // reader so that asymmetric input survives long enough to be reported.
    void set_triple_raw(const IndexTriple &key, const Rational &v);
    // Symmetrised lookup; absent entries are zero.
    Rational triple_at(std::size_t i, std::size_t j, std::size_t k) const;
    const std::map<IndexTriple, Rational> &triple_entries() const noexcept
    {
        return m_triple;
    }

    const std::vector<Rational> &c2_vector() const noexcept
    {
        return m_c2;
    }
    void set_c2(std::size_t i, const Rational &v);
    void set_c2(const std::string &symbol, const Rational &v);
    void set_c2_vector(std::vector<Rational> values)
    {
        m_c2 = std::move(values);
    }

    const Rational &chi_O() const noexcept
    {
        return m_chi_O;
    }
    void set_chi_O(const Rational &v)
    {
        m_chi_O = v;
    }

    const DivisorExpr &canonical() const noexcept
    {
        return m_canonical;
    }
    void set_canonical(DivisorExpr k)
    {
        m_canonical = std::move(k);
    }

    const std::vector<PositivityFlag> &flags() const noexcept
    {
        return m_flags;
    }
    void add_flag(PositivityFlag f);
    void add_flag(FlagKind kind)
    {
        add_flag(PositivityFlag{kind, std::nullopt});
    }
    void add_flag(FlagKind kind, const DivisorExpr &subject)
    {
        add_flag(PositivityFlag{kind, subject});
    }
    void clear_flags()
    {
        m_flags.clear();
    }

    const std::map<std::string, DivisorExpr> &named_divisors() const noexcept
    {
        return m_named;
    }
    void set_named(const std::string &name, DivisorExpr d);

    // Symbol lookup used by every evaluator: basis symbols map to themselves,
    // "K" to the canonical class, then named divisors. Throws unknown_symbol.
    DivisorExpr resolve_symbol(const std::string &symbol) const;
    DivisorExpr resolve(const DivisorExpr &d) const;
    DivisorExpr resolve(std::string_view text) const
    {
        return resolve(parse_divisor(text));
    }

    // Coefficient vector over the basis; throws unknown_symbol for anything
    // outside the basis.
    std::vector<Rational> coordinates(const DivisorExpr &d) const;

    friend bool operator==(const ThreefoldProfile &, const ThreefoldProfile &) = default;

private:
    std::vector<std::string> m_basis;
    std::map<IndexTriple, Rational> m_triple;
    std::vector<Rational> m_c2;
    Rational m_chi_O;
    DivisorExpr m_canonical;
    std::vector<PositivityFlag> m_flags;
    std::map<std::string, DivisorExpr> m_named;
};

struct Violation {
    std::string invariant;
    std::string message;
};

// Empty iff the profile is structurally sound, its triple form is symmetric,
// chi(O) is an integer and K.c2 = -24 chi(O).
std::vector<Violation> validate_profile(const ThreefoldProfile &p);

// Throws invalid_profile carrying the first violation, if any.
void require_valid(const ThreefoldProfile &p);

// Both evaluators accept basis symbols, K and named divisors.
Rational triple_eval(const ThreefoldProfile &p, const DivisorExpr &d1, const DivisorExpr &d2, const DivisorExpr &d3);
Rational c2_pair_eval(const ThreefoldProfile &p, const DivisorExpr &d);

// Symbols of n are looked up in `bindings` first, then through
// ThreefoldProfile::resolve_symbol.
using SymbolBindings = std::map<std::string, DivisorExpr>;
Rational number_eval(const ThreefoldProfile &p, const NumberExpr &n, const SymbolBindings &bindings = {});

// Flag queries. The taxonomy is closed under the standard implications
// (ample => nef and big, nef and big => nef, nef => pseudo-effective =>
// generically nef) and under positive rescaling of the subject.
const PositivityFlag *find_flag(const ThreefoldProfile &p, FlagKind kind);
const PositivityFlag *find_flag(const ThreefoldProfile &p, FlagKind kind, const DivisorExpr &subject);
inline bool has_flag(const ThreefoldProfile &p, FlagKind kind)
{
    return find_flag(p, kind) != nullptr;
}
inline bool has_flag(const ThreefoldProfile &p, FlagKind kind, const DivisorExpr &subject)
{
    return find_flag(p, kind, subject) != nullptr;
}

} // namespace adjoint

#endif
