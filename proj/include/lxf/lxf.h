#ifndef LXF_LXF_H
#define LXF_LXF_H

/* C interface to the lxf core: identity verification reports, partition
   tables, asymptotic comparisons and the Meijer-G oracle. Handles are opaque;
   every call that can fail returns an lxf_status. Strings returned through
   char** are owned by the caller and released with lxf_string_free. */

#include <stddef.h>

#if defined(LXF_BUILDING)
#define LXF_API __attribute__((visibility("default")))
#else
#define LXF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lxf_status {
    LXF_OK = 0,
    LXF_POLE = 1,
    LXF_DOMAIN = 2,
    LXF_NON_CONVERGED = 3,
    LXF_REDUCTION_POLE = 4,
    LXF_QUADRATURE_FAIL = 5,
    LXF_DIVERGENT_TAIL = 6,
    LXF_UNSTABLE_FIT = 7,
    LXF_CONFIG = 8,
    LXF_INTERNAL = 9
} lxf_status;

typedef enum lxf_tier { LXF_TIER_DOUBLE = 0, LXF_TIER_EXTENDED = 1 } lxf_tier;

/* complex number as an unevaluated double-double pair per component */
typedef struct lxf_value {
    double re_hi, re_lo, im_hi, im_lo;
} lxf_value;

typedef struct lxf_policy lxf_policy;
typedef struct lxf_report lxf_report;

LXF_API const char* lxf_status_name(lxf_status s);
/* message of the last failing call on this thread, "" if none */
LXF_API const char* lxf_last_error(void);
LXF_API void lxf_string_free(char* s);

LXF_API lxf_value lxf_value_make(double re, double im);
/* Accepts a real or "re,im"; each part is a decimal, a constant token
   (pi, 2pi, e), k*token, k token, or token^p with decimal p. Evaluated in
   double-double. */
LXF_API lxf_status lxf_value_parse(const char* text, lxf_value* out);

LXF_API lxf_policy* lxf_policy_new(lxf_tier tier);
LXF_API void lxf_policy_free(lxf_policy* p);
LXF_API lxf_status lxf_policy_set_rel_tol(lxf_policy* p, double rel_tol);
LXF_API lxf_status lxf_policy_set_max_terms(lxf_policy* p, long max_terms);
LXF_API lxf_tier lxf_policy_tier(const lxf_policy* p);

enum {
    LXF_HAS_A = 1,
    LXF_HAS_Y = 2,
    LXF_HAS_Z = 4,
    LXF_HAS_ALPHA = 8,
    LXF_HAS_BETA = 16
};

typedef struct lxf_params {
    int N;
    int m;
    unsigned set; /* LXF_HAS_* bits for the value fields below */
    lxf_value a, y, z, alpha, beta;
    int k_form; /* main-transform only: evaluate the K form */
} lxf_params;

LXF_API void lxf_params_init(lxf_params* p);

LXF_API size_t lxf_identity_count(void);
LXF_API const char* lxf_identity_name(size_t i);

/* Evaluates one identity. tol <= 0 keeps the identity's default tolerance.
   Precondition failures and series that do not converge still produce a
   report (carrying the error); *out is NULL only for LXF_CONFIG (unknown
   identity or missing parameter) and LXF_INTERNAL. */
LXF_API lxf_status lxf_verify(const char* identity, const lxf_params* params, const lxf_policy* policy, double tol,
                              lxf_report** out);

/* meijer_g_reduced against the Mellin-Barnes oracle, as a report */
LXF_API lxf_status lxf_meijer_oracle(int N, lxf_value a, lxf_value z, const lxf_policy* policy, double tol,
                                     lxf_report** out);

LXF_API void lxf_report_free(lxf_report* r);
LXF_API int lxf_report_pass(const lxf_report* r);
LXF_API double lxf_report_rel_err(const lxf_report* r);
LXF_API double lxf_report_tol(const lxf_report* r);
LXF_API lxf_status lxf_report_status(const lxf_report* r);
LXF_API const char* lxf_report_identity(const lxf_report* r);
LXF_API lxf_value lxf_report_lhs(const lxf_report* r);
LXF_API lxf_value lxf_report_rhs(const lxf_report* r);
/* serialized forms; pointers stay valid until lxf_report_free */
LXF_API const char* lxf_report_json(const lxf_report* r);
LXF_API const char* lxf_report_csv_row(const lxf_report* r);
LXF_API const char* lxf_csv_header(void);

/* "n,count" CSV of the power-partition counts, n = 0..max_n */
LXF_API lxf_status lxf_partitions_csv(int N, long max_n, char** out);

/* JSON: the expansion plus, per y, exact value, expansion value, error and
   the ratio to the error at 2y when that y is also in the list */
LXF_API lxf_status lxf_asym_sigma_json(int N, int m, int r, const double* ys, size_t ny, char** out);
/* JSON: Wright's constant, its panel-doubling change, and c_estimate(N) */
LXF_API lxf_status lxf_asym_constant_json(int N, char** out);

#ifdef __cplusplus
}
#endif

#endif
