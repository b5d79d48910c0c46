#ifndef ZBRX_H
#define ZBRX_H

/* C interface to the extension-semigroup workbench. All functions
 * return a zbrx_status; results come back through out-parameters.
 * Strings returned through char** are heap-allocated and must be
 * released with zbrx_string_free. Handles are opaque and must be
 * released with their matching _free call. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zbrx_status {
  ZBRX_OK = 0,
  ZBRX_ERR_ARGUMENT = 1,    /* invalid argument / combination */
  ZBRX_ERR_PARSE = 2,       /* malformed config or table text */
  ZBRX_ERR_UNSUPPORTED = 3, /* operation not defined for this instance */
  ZBRX_ERR_LIMIT = 4,       /* size cap or schedule refusal */
  ZBRX_ERR_INTERNAL = 5
} zbrx_status;

typedef struct zbrx_monoid zbrx_monoid;
typedef struct zbrx_semigroup zbrx_semigroup;
typedef struct zbrx_report zbrx_report;

/* Message for the most recent failing call on this thread; empty
 * string when no failure has been recorded. The pointer stays valid
 * until the next failing call on the same thread. */
const char* zbrx_last_error(void);

void zbrx_string_free(char* s);

/* ---- finite monoids ---- */

zbrx_status zbrx_monoid_builtin(const char* name, zbrx_monoid** out);
zbrx_status zbrx_monoid_parse(const char* text, zbrx_monoid** out);
zbrx_status zbrx_monoid_format(const zbrx_monoid* m, char** out);
void zbrx_monoid_free(zbrx_monoid* m);

/* ---- extension semigroups ---- */

/* Builds the semigroup described by a config in the "key: value"
 * text format (keys: construction, carrier, theta, u, window, gbound,
 * topology, schedule, suite). */
zbrx_status zbrx_semigroup_from_config(const char* config_text,
                                       zbrx_semigroup** out);
/* Product of (i1,s1,j1) and (i2,s2,j2). */
zbrx_status zbrx_semigroup_mul(const zbrx_semigroup* g, int64_t i1, int64_t s1,
                               int64_t j1, int64_t i2, int64_t s2, int64_t j2,
                               int64_t* ri, int64_t* rs, int64_t* rj);
/* Product table over the window; one "i j s m t n -> k d l" line per
 * product. Refuses with ZBRX_ERR_LIMIT beyond `cap` products. */
zbrx_status zbrx_semigroup_cayley(const zbrx_semigroup* g, int64_t lo,
                                  int64_t hi, int64_t gbound, int64_t cap,
                                  char** out);
void zbrx_semigroup_free(zbrx_semigroup* g);

/* ---- configs ---- */

/* Canonical serialization of a parsed config; the round trip is the
 * identity. */
zbrx_status zbrx_config_canonical(const char* config_text, char** out);

/* ---- verification ---- */

/* Newline-separated names of the builtin suites. */
zbrx_status zbrx_suite_names(char** out);
/* Runs the suites named by the config's `suite` key ("all" allowed). */
zbrx_status zbrx_verify_run(const char* config_text, zbrx_report** out);
zbrx_status zbrx_report_text(const zbrx_report* r, char** out);
zbrx_status zbrx_report_machine(const zbrx_report* r, char** out);
/* 0 all pass, 1 any fail, 2 inconclusive only. */
zbrx_status zbrx_report_exit_code(const zbrx_report* r, int* out);
void zbrx_report_free(zbrx_report* r);

#ifdef __cplusplus
}
#endif

#endif /* ZBRX_H */
