/*
 * C interface to the adjoint library.
 *
 * Profiles are opaque handles owned by the caller and released with
 * adj_profile_free(). Strings returned through `char **` out-parameters are
 * heap allocated and released with adj_string_free(). Structured results are
 * JSON documents; rationals inside them are "p/q" strings.
 *
 * Every function returns an adj_status. On failure the out-parameters are
 * left untouched and adj_last_error() describes the failure for the calling
 * thread until its next call into the library.
 */
#ifndef ADJOINT_ADJOINT_H
#define ADJOINT_ADJOINT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ADJOINT_BUILDING_LIBRARY)
#    define ADJ_API __declspec(dllexport)
#  else
#    define ADJ_API __declspec(dllimport)
#  endif
#else
#  define ADJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adj_status {
    ADJ_OK = 0,
    ADJ_ERR_UNKNOWN_SYMBOL = 1,
    ADJ_ERR_DEGREE_OVERFLOW = 2,
    ADJ_ERR_DOUBLE_C2_ATOM = 3,
    ADJ_ERR_SYMBOL_COLLISION = 4,
    ADJ_ERR_MISSING_DEGREE = 5,
    ADJ_ERR_MISSING_FLAG = 6,
    ADJ_ERR_NON_INTEGER_CHI = 7,
    ADJ_ERR_SIGN_CONTRADICTION = 8,
    ADJ_ERR_POSITIVITY_CONTRADICTION = 9,
    ADJ_ERR_INVALID_PROFILE = 10,
    ADJ_ERR_INVALID_ARGUMENT = 11,
    ADJ_ERR_NOT_FOUND = 12,
    ADJ_ERR_PARSE = 13,
    ADJ_ERR_INTERNAL = 99
} adj_status;

typedef struct adj_profile adj_profile;

ADJ_API const char *adj_version(void);
ADJ_API const char *adj_status_name(adj_status status);
ADJ_API const char *adj_last_error(void);
ADJ_API void adj_string_free(char *s);

/* Profiles */
ADJ_API adj_status adj_profile_parse(const char *json_text, adj_profile **out);
ADJ_API adj_status adj_profile_serialize(const adj_profile *p, char **out_json);
ADJ_API adj_status adj_profile_clone(const adj_profile *p, adj_profile **out);
ADJ_API void adj_profile_free(adj_profile *p);
/* Writes the number of violations to *out_count and, if out_json is not
 * NULL, the violation records as a JSON array. */
ADJ_API adj_status adj_profile_validate(const adj_profile *p, size_t *out_count, char **out_json);

/* Catalog */
ADJ_API adj_status adj_catalog_get(const char *name, adj_profile **out);
ADJ_API adj_status adj_catalog_names(char **out_json);

/* Evaluation. Divisors are expressions such as "K+5*H" or "2H-E"; they may
 * use basis symbols, K and the profile's named divisors. Rationals are
 * returned as "p/q" strings. */
ADJ_API adj_status adj_triple(const adj_profile *p, const char *d1, const char *d2, const char *d3, char **out);
ADJ_API adj_status adj_c2_pair(const adj_profile *p, const char *d, char **out);
ADJ_API adj_status adj_chi(const adj_profile *p, const char *divisor, char **out);
/* h0 via declared vanishing, as a decimal integer string. */
ADJ_API adj_status adj_h0_from_chi(const adj_profile *p, const char *divisor, char **out);

/* rule: "fukuma-ka", "fukuma-gap", "nefbig", "bs" or "miyaoka".
 * Result JSON: {"value","ceil"} for the first four; {"lhs","rhs","holds",
 * "hypotheses_met"} for "miyaoka" (the divisor plays both A and H). */
ADJ_API adj_status adj_bound(const adj_profile *p, const char *divisor, const char *rule, char **out_json);
ADJ_API adj_status adj_miyaoka(const adj_profile *p, const char *a, const char *h, char **out_json);
/* {"value","holds"} */
ADJ_API adj_status adj_generic_nef_pairing(const adj_profile *p, const char *l, const char *h1, const char *h2,
                                           char **out_json);

/* target: "adjoint" or "bs". Writes the certificate as JSON. */
ADJ_API adj_status adj_certify(const adj_profile *p, const char *divisor, const char *target, char **out_json);

/* Blow-ups. degrees_json maps each basis symbol to its "p/q" degree on the
 * curve, e.g. {"H": "25/1"}. */
ADJ_API adj_status adj_blowup_point(const adj_profile *p, const char *symbol, adj_profile **out);
ADJ_API adj_status adj_blowup_curve(const adj_profile *p, const char *symbol, long genus, const char *degrees_json,
                                    adj_profile **out);
/* Point blow-up of p followed by the invariance check for A' = a_target. */
ADJ_API adj_status adj_step1_check(const adj_profile *p, const char *a_target, int *out_first, int *out_second);

/* Symbolic identity suite: [{"name","holds"}, ...]; *out_all_hold is 1 iff
 * every identity holds. */
ADJ_API adj_status adj_identities(char **out_json, int *out_all_hold);

/* {"eps","value","anticanonical_pairing","generically_nef"} */
ADJ_API adj_status adj_witness_bad_anticanonical(const adj_profile *p, char **out_json);

#ifdef __cplusplus
}
#endif

#endif
