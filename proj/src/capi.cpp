#include <adjoint/adjoint.h>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <nlohmann/json.hpp>

#include <adjoint/birational.hpp>
#include <adjoint/bounds.hpp>
#include <adjoint/catalog.hpp>
#include <adjoint/error.hpp>
#include <adjoint/profile_io.hpp>
#include <adjoint/riemann_roch.hpp>

struct adj_profile {
    adjoint::ThreefoldProfile value;
};

namespace
{

using namespace adjoint;
using nlohmann::json;

thread_local std::string last_error;

adj_status status_of(ErrorKind k)
{
    switch (k) {
        case ErrorKind::unknown_symbol:
            return ADJ_ERR_UNKNOWN_SYMBOL;
        case ErrorKind::degree_overflow:
            return ADJ_ERR_DEGREE_OVERFLOW;
        case ErrorKind::double_c2_atom:
            return ADJ_ERR_DOUBLE_C2_ATOM;
        case ErrorKind::symbol_collision:
            return ADJ_ERR_SYMBOL_COLLISION;
        case ErrorKind::missing_degree:
            return ADJ_ERR_MISSING_DEGREE;
        case ErrorKind::missing_flag:
            return ADJ_ERR_MISSING_FLAG;
        case ErrorKind::non_integer_chi:
            return ADJ_ERR_NON_INTEGER_CHI;
        case ErrorKind::sign_contradiction:
            return ADJ_ERR_SIGN_CONTRADICTION;
        case ErrorKind::positivity_contradiction:
            return ADJ_ERR_POSITIVITY_CONTRADICTION;
        case ErrorKind::invalid_profile:
            return ADJ_ERR_INVALID_PROFILE;
        case ErrorKind::invalid_argument:
            return ADJ_ERR_INVALID_ARGUMENT;
        case ErrorKind::not_found:
            return ADJ_ERR_NOT_FOUND;
        case ErrorKind::parse_error:
            return ADJ_ERR_PARSE;
    }
    return ADJ_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <typename F>
adj_status guarded(F &&f) noexcept
{
    last_error.clear();
    try {
        f();
        return ADJ_OK;
    } catch (const Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return ADJ_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return ADJ_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return ADJ_ERR_INTERNAL;
    }
}

char *dup_string(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void *ptr, const char *what)
{
    if (!ptr) {
        throw Error(ErrorKind::invalid_argument, std::string(what) + " must not be NULL");
    }
}

const ThreefoldProfile &profile_of(const adj_profile *p)
{
    require(p, "profile");
    return p->value;
}

DivisorExpr divisor_of(const ThreefoldProfile &p, const char *text)
{
    require(text, "divisor");
    return p.resolve(parse_divisor(text));
}

std::string miyaoka_json(const ThreefoldProfile &prof, const char *a, const char *h)
{
    const auto r = miyaoka_c2_inequality(prof, divisor_of(prof, a), divisor_of(prof, h));
    const json j = {{"lhs", to_string(r.lhs)},
                    {"rhs", to_string(r.rhs)},
                    {"holds", r.holds},
                    {"hypotheses_met", r.hypotheses_met}};
    return j.dump();
}

adj_profile *wrap(ThreefoldProfile p)
{
    return new adj_profile{std::move(p)};
}

} // namespace

extern "C" {

const char *adj_version(void)
{
    return "1.0.0";
}

const char *adj_status_name(adj_status status)
{
    switch (status) {
        case ADJ_OK:
            return "ok";
        case ADJ_ERR_UNKNOWN_SYMBOL:
            return "unknown-symbol";
        case ADJ_ERR_DEGREE_OVERFLOW:
            return "degree-overflow";
        case ADJ_ERR_DOUBLE_C2_ATOM:
            return "double-c2-atom";
        case ADJ_ERR_SYMBOL_COLLISION:
            return "symbol-collision";
        case ADJ_ERR_MISSING_DEGREE:
            return "missing-degree";
        case ADJ_ERR_MISSING_FLAG:
            return "missing-flag";
        case ADJ_ERR_NON_INTEGER_CHI:
            return "non-integer-chi";
        case ADJ_ERR_SIGN_CONTRADICTION:
            return "sign-contradiction";
        case ADJ_ERR_POSITIVITY_CONTRADICTION:
            return "positivity-contradiction";
        case ADJ_ERR_INVALID_PROFILE:
            return "invalid-profile";
        case ADJ_ERR_INVALID_ARGUMENT:
            return "invalid-argument";
        case ADJ_ERR_NOT_FOUND:
            return "not-found";
        case ADJ_ERR_PARSE:
            return "parse-error";
        case ADJ_ERR_INTERNAL:
            return "internal";
    }
    return "unknown";
}

const char *adj_last_error(void)
{
    return last_error.c_str();
}

void adj_string_free(char *s)
{
    std::free(s);
}

adj_status adj_profile_parse(const char *json_text, adj_profile **out)
{
    return guarded([&] {
        require(json_text, "json_text");
        require(out, "out");
        *out = wrap(parse_profile(json_text));
    });
}

adj_status adj_profile_serialize(const adj_profile *p, char **out_json)
{
    return guarded([&] {
        require(out_json, "out_json");
        *out_json = dup_string(serialize_profile(profile_of(p)));
    });
}

adj_status adj_profile_clone(const adj_profile *p, adj_profile **out)
{
    return guarded([&] {
        require(out, "out");
        *out = wrap(profile_of(p));
    });
}

void adj_profile_free(adj_profile *p)
{
    delete p;
}

adj_status adj_profile_validate(const adj_profile *p, size_t *out_count, char **out_json)
{
    return guarded([&] {
        require(out_count, "out_count");
        const auto v = validate_profile(profile_of(p));
        if (out_json) {
            *out_json = dup_string(violations_to_json(v).dump());
        }
        *out_count = v.size();
    });
}

adj_status adj_catalog_get(const char *name, adj_profile **out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = wrap(catalog_get(name).profile);
    });
}

adj_status adj_catalog_names(char **out_json)
{
    return guarded([&] {
        require(out_json, "out_json");
        *out_json = dup_string(json(catalog_names()).dump());
    });
}

adj_status adj_triple(const adj_profile *p, const char *d1, const char *d2, const char *d3, char **out)
{
    return guarded([&] {
        require(out, "out");
        const auto &prof = profile_of(p);
        *out = dup_string(to_string(triple_eval(prof, divisor_of(prof, d1), divisor_of(prof, d2), divisor_of(prof, d3))));
    });
}

adj_status adj_c2_pair(const adj_profile *p, const char *d, char **out)
{
    return guarded([&] {
        require(out, "out");
        const auto &prof = profile_of(p);
        *out = dup_string(to_string(c2_pair_eval(prof, divisor_of(prof, d))));
    });
}

adj_status adj_chi(const adj_profile *p, const char *divisor, char **out)
{
    return guarded([&] {
        require(out, "out");
        const auto &prof = profile_of(p);
        *out = dup_string(to_string(chi_line_bundle(prof, divisor_of(prof, divisor))));
    });
}

adj_status adj_h0_from_chi(const adj_profile *p, const char *divisor, char **out)
{
    return guarded([&] {
        require(out, "out");
        const auto &prof = profile_of(p);
        *out = dup_string(h0_lower_bound_from_chi(prof, divisor_of(prof, divisor)).str());
    });
}

adj_status adj_miyaoka(const adj_profile *p, const char *a, const char *h, char **out_json)
{
    return guarded([&] {
        require(out_json, "out_json");
        *out_json = dup_string(miyaoka_json(profile_of(p), a, h));
    });
}

adj_status adj_bound(const adj_profile *p, const char *divisor, const char *rule, char **out_json)
{
    return guarded([&] {
        require(rule, "rule");
        require(out_json, "out_json");
        const auto &prof = profile_of(p);
        if (std::string_view(rule) == "miyaoka") {
            *out_json = dup_string(miyaoka_json(prof, divisor, divisor));
            return;
        }
        const Rational v = evaluate_bound(parse_bound_rule(rule), prof, divisor_of(prof, divisor));
        const json j = {{"value", to_string(v)}, {"ceil", ceil(v).str()}};
        *out_json = dup_string(j.dump());
    });
}

adj_status adj_generic_nef_pairing(const adj_profile *p, const char *l, const char *h1, const char *h2,
                                   char **out_json)
{
    return guarded([&] {
        require(out_json, "out_json");
        const auto &prof = profile_of(p);
        const auto r = generic_nef_pairing_test(prof, divisor_of(prof, l), divisor_of(prof, h1), divisor_of(prof, h2));
        *out_json = dup_string(json{{"value", to_string(r.value)}, {"holds", r.holds}}.dump());
    });
}

adj_status adj_certify(const adj_profile *p, const char *divisor, const char *target, char **out_json)
{
    return guarded([&] {
        require(target, "target");
        require(out_json, "out_json");
        const auto &prof = profile_of(p);
        const std::string_view t(target);
        Certificate c;
        if (t == "adjoint") {
            c = certify_h0_adjoint(prof, divisor_of(prof, divisor));
        } else if (t == "bs") {
            c = certify_h0_bs(prof, divisor_of(prof, divisor));
        } else {
            throw Error(ErrorKind::parse_error, "unknown certification target '" + std::string(t) + "'");
        }
        *out_json = dup_string(certificate_to_json(c).dump());
    });
}

adj_status adj_blowup_point(const adj_profile *p, const char *symbol, adj_profile **out)
{
    return guarded([&] {
        require(symbol, "symbol");
        require(out, "out");
        *out = wrap(blow_up_point(profile_of(p), symbol).first);
    });
}

adj_status adj_blowup_curve(const adj_profile *p, const char *symbol, long genus, const char *degrees_json,
                            adj_profile **out)
{
    return guarded([&] {
        require(symbol, "symbol");
        require(degrees_json, "degrees_json");
        require(out, "out");
        json j;
        try {
            j = json::parse(degrees_json);
        } catch (const json::exception &e) {
            throw Error(ErrorKind::parse_error, std::string("degrees are not valid JSON: ") + e.what());
        }
        if (!j.is_object()) {
            throw Error(ErrorKind::parse_error, "degrees must be a JSON object");
        }
        std::map<std::string, Rational> degrees;
        for (const auto &[sym, v] : j.items()) {
            if (!v.is_string()) {
                throw Error(ErrorKind::parse_error, "degree for '" + sym + "' must be a \"p/q\" string");
            }
            degrees[sym] = parse_rational(v.get<std::string>());
        }
        *out = wrap(blow_up_curve(profile_of(p), symbol, genus, degrees).first);
    });
}

adj_status adj_step1_check(const adj_profile *p, const char *a_target, int *out_first, int *out_second)
{
    return guarded([&] {
        require(out_first, "out_first");
        require(out_second, "out_second");
        const auto &prof = profile_of(p);
        std::string sym = "E";
        while (prof.has_symbol(sym) || prof.named_divisors().count(sym) != 0) {
            sym += "'";
        }
        const auto [src, map] = blow_up_point(prof, sym);
        const auto [a, b] = step1_invariance_check(map, divisor_of(prof, a_target));
        *out_first = a ? 1 : 0;
        *out_second = b ? 1 : 0;
    });
}

adj_status adj_identities(char **out_json, int *out_all_hold)
{
    return guarded([&] {
        require(out_json, "out_json");
        require(out_all_hold, "out_all_hold");
        json arr = json::array();
        bool all = true;
        for (const auto &[name, holds] : identity_suite()) {
            arr.push_back({{"name", name}, {"holds", holds}});
            all = all && holds;
        }
        *out_json = dup_string(arr.dump());
        *out_all_hold = all ? 1 : 0;
    });
}

adj_status adj_witness_bad_anticanonical(const adj_profile *p, char **out_json)
{
    return guarded([&] {
        require(out_json, "out_json");
        const auto w = bad_anticanonical_witness(profile_of(p));
        const json j = {{"eps", to_string(w.eps)},
                        {"value", to_string(w.value)},
                        {"anticanonical_pairing", to_string(w.anticanonical_pairing.value)},
                        {"generically_nef", w.anticanonical_pairing.holds}};
        *out_json = dup_string(j.dump());
    });
}

} // extern "C"
