#include <adjoint/profile_io.hpp>

#include <string>

#include <adjoint/error.hpp>

namespace adjoint
{

using nlohmann::json;

namespace
{

[[noreturn]] void malformed(const std::string &why)
{
    throw Error(ErrorKind::parse_error, "malformed profile: " + why);
}

const json &member(const json &j, const char *key)
{
    const auto it = j.find(key);
    if (it == j.end()) {
        malformed(std::string("missing field '") + key + "'");
    }
    return *it;
}

std::string string_of(const json &j, const char *what)
{
    if (!j.is_string()) {
        malformed(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

Rational rational_of(const json &j, const char *what)
{
    return parse_rational(string_of(j, what));
}

std::size_t index_of_json(const json &j, const char *what)
{
    if (!j.is_number_unsigned()) {
        malformed(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

// Profile-level divisor expressions are stored over the basis.
DivisorExpr basis_divisor(const ThreefoldProfile &p, const json &j, const char *what)
{
    const DivisorExpr d = p.resolve(parse_divisor(string_of(j, what)));
    p.coordinates(d);
    return d;
}

} // namespace

json profile_to_json(const ThreefoldProfile &p)
{
    json j;
    j["format"] = profile_format_tag;
    j["name"] = p.name;
    j["basis"] = p.basis();
    json triple = json::array();
    for (const auto &[key, v] : p.triple_entries()) {
        triple.push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"value", to_string(v)}});
    }
    j["triple"] = std::move(triple);
    json c2 = json::array();
    for (const auto &v : p.c2_vector()) {
        c2.push_back(to_string(v));
    }
    j["c2"] = std::move(c2);
    j["chi_O"] = to_string(p.chi_O());
    j["canonical"] = to_string(p.canonical());
    json named = json::object();
    for (const auto &[name, d] : p.named_divisors()) {
        named[name] = to_string(d);
    }
    j["named_divisors"] = std::move(named);
    json flags = json::array();
    for (const auto &f : p.flags()) {
        flags.push_back(flag_to_json(f));
    }
    j["flags"] = std::move(flags);
    return j;
}

ThreefoldProfile profile_from_json(const json &j)
{
    if (!j.is_object()) {
        malformed("top level must be an object");
    }
    if (const auto it = j.find("format"); it != j.end() && *it != profile_format_tag) {
        malformed("unsupported format " + it->dump());
    }

    const json &basis_j = member(j, "basis");
    if (!basis_j.is_array()) {
        malformed("basis must be an array");
    }
    std::vector<std::string> basis;
    for (const auto &s : basis_j) {
        basis.push_back(string_of(s, "basis symbol"));
    }
    ThreefoldProfile p(std::move(basis));
    if (const auto it = j.find("name"); it != j.end()) {
        p.name = string_of(*it, "name");
    }

    const json &triple = member(j, "triple");
    if (!triple.is_array()) {
        malformed("triple must be an array");
    }
    for (const auto &rec : triple) {
        if (!rec.is_object()) {
            malformed("triple records must be objects");
        }
        const IndexTriple key{index_of_json(member(rec, "i"), "i"), index_of_json(member(rec, "j"), "j"),
                              index_of_json(member(rec, "k"), "k")};
        p.set_triple_raw(key, rational_of(member(rec, "value"), "triple value"));
    }

    const json &c2 = member(j, "c2");
    if (!c2.is_array()) {
        malformed("c2 must be an array");
    }
    std::vector<Rational> c2v;
    for (const auto &v : c2) {
        c2v.push_back(rational_of(v, "c2 entry"));
    }
    p.set_c2_vector(std::move(c2v));

    p.set_chi_O(rational_of(member(j, "chi_O"), "chi_O"));

    {
        const DivisorExpr k = parse_divisor(string_of(member(j, "canonical"), "canonical"));
        p.coordinates(k);
        p.set_canonical(k);
    }

    if (const auto it = j.find("named_divisors"); it != j.end()) {
        if (!it->is_object()) {
            malformed("named_divisors must be an object");
        }
        for (const auto &[name, d] : it->items()) {
            if (!is_valid_symbol(name) || p.has_symbol(name) || name == canonical_symbol) {
                malformed("bad named divisor '" + name + "'");
            }
            p.set_named(name, basis_divisor(p, d, "named divisor"));
        }
    }

    if (const auto it = j.find("flags"); it != j.end()) {
        if (!it->is_array()) {
            malformed("flags must be an array");
        }
        for (const auto &rec : *it) {
            const FlagKind kind = parse_flag_kind(string_of(member(rec, "kind"), "flag kind"));
            const auto subj = rec.find("subject");
            if (is_variety_level(kind)) {
                if (subj != rec.end() && !subj->is_null()) {
                    malformed(std::string("flag ") + flag_kind_name(kind) + " takes no subject");
                }
                p.add_flag(kind);
            } else {
                if (subj == rec.end() || subj->is_null()) {
                    malformed(std::string("flag ") + flag_kind_name(kind) + " needs a subject");
                }
                p.add_flag(kind, basis_divisor(p, *subj, "flag subject"));
            }
        }
    }
    return p;
}

std::string serialize_profile(const ThreefoldProfile &p)
{
    return profile_to_json(p).dump(2) + "\n";
}

ThreefoldProfile parse_profile(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::parse_error, std::string("profile is not valid JSON: ") + e.what());
    }
    try {
        return profile_from_json(j);
    } catch (const Error &e) {
        // Unknown symbols inside a file are malformed input, not evaluation errors.
        if (e.kind() == ErrorKind::unknown_symbol) {
            throw Error(ErrorKind::parse_error, std::string("malformed profile: ") + e.what());
        }
        throw;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::parse_error, std::string("malformed profile: ") + e.what());
    }
}

json violations_to_json(const std::vector<Violation> &v)
{
    json out = json::array();
    for (const auto &x : v) {
        out.push_back({{"invariant", x.invariant}, {"message", x.message}});
    }
    return out;
}

json flag_to_json(const PositivityFlag &f)
{
    return {{"kind", flag_kind_name(f.kind)},
            {"subject", f.subject ? json(to_string(*f.subject)) : json(nullptr)}};
}

json certificate_to_json(const Certificate &c)
{
    json j;
    j["conclusion"] = conclusion_name(c.conclusion);
    j["route"] = route_name(c.route);
    j["rational_bound"] = c.rational_bound ? json(to_string(*c.rational_bound)) : json(nullptr);
    j["integer_bound"] = c.integer_bound ? json(c.integer_bound->str()) : json(nullptr);
    json used = json::array();
    for (const auto &f : c.hypotheses_used) {
        used.push_back(flag_to_json(f));
    }
    j["hypotheses_used"] = std::move(used);
    json cites = json::array();
    for (auto cite : c.citations) {
        cites.push_back(citation_name(cite));
    }
    j["citations"] = std::move(cites);
    return j;
}

} // namespace adjoint
