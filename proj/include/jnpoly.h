/* C interface to the jnp core: opaque handles, integer status codes,
 * malloc'd strings released with jnp_string_free. Every function returns a
 * status code (0 = ok); on failure jnp_last_error() holds a message for the
 * calling thread and out-parameters are left untouched. */
#ifndef JNPOLY_H
#define JNPOLY_H

#ifdef __cplusplus
extern "C" {
#endif

enum jnp_status {
  JNP_OK = 0,
  JNP_E_DEGENERATE_POINT,
  JNP_E_OUT_OF_ARC,
  JNP_E_EMPTY_SUPPORT,
  JNP_E_ZERO_POLYNOMIAL,
  JNP_E_NOT_IN_IMAGE,
  JNP_E_NOT_CLOSED,
  JNP_E_NOT_HOMOGENEOUS,
  JNP_E_NOT_IN_L,
  JNP_E_BAD_DIRECTION,
  JNP_E_DIRECTION_MISMATCH,
  JNP_E_NOT_COMPANION,
  JNP_E_HYPOTHESIS_VIOLATED,
  JNP_E_NON_DIVISIBLE,
  JNP_E_BAD_START,
  JNP_E_BAD_PARAMS,
  JNP_E_EDGE_REJECTED,
  JNP_E_NO_COMMON_ROOT,
  JNP_E_RATIO_MISMATCH,
  JNP_E_HYPOTHESIS_UNMET,
  JNP_E_NOT_ANCHORED,
  JNP_E_NOT_DIVISIBLE,
  JNP_E_POWER_ROOT_FAILED,
  JNP_E_PARSE,
  JNP_E_BAD_INPUT,
  JNP_E_INTERNAL = 100
};

/* Name of a status code ("Ok", "ParseError", ...). */
const char* jnp_status_name(int code);

/* Message of the most recent failure on this thread; never NULL. */
const char* jnp_last_error(void);

/* Releases strings returned through char** out-parameters. */
void jnp_string_free(char* s);

/* ---- polynomial handles ---- */

typedef struct jnp_poly jnp_poly;

int jnp_poly_parse(const char* text, jnp_poly** out);
void jnp_poly_free(jnp_poly* p);
int jnp_poly_serialize(const jnp_poly* p, char** out);
int jnp_poly_bracket(const jnp_poly* p, const jnp_poly* q, jnp_poly** out);
int jnp_poly_tilde_j(const jnp_poly* p, const jnp_poly* q, jnp_poly** out);
int jnp_poly_equals(const jnp_poly* p, const jnp_poly* q, int* equal);

/* ---- command endpoints (text out) ---- */

/* Support, hull corners, lower-side edges and direction set of expr;
 * with dir = "R,S" also the leading form and its st/en endpoints. */
int jnp_cmd_poly_show(const char* expr, const char* dir, char** out);

/* Pair report: polygon audit, slope-one edges, tilde-J, and the edge
 * obstruction verdict for each direction meeting its hypotheses.
 * *flagged = 1 when any violation or Obstructed verdict appears. */
int jnp_cmd_pair_audit(const char* p_expr, const char* q_expr, char** out, int* flagged);

/* Corner enumeration up to v_{1,-1} < bound. pool: comma-separated
 * rationals or NULL for the default; imax 0 keeps the default. csv
 * selects the summary table instead of the JSON report. *audit_out
 * gets one consistency violation per line ("" when clean). */
int jnp_cmd_enumerate(unsigned long bound, const char* pool, unsigned long imax, int csv,
                      char** out, char** audit_out);

/* Validates a chain given as JSON text. *fully_witnessed = 1 only when
 * the chain checks out with complete witnesses on every edge. */
int jnp_cmd_witness_verify(const char* chain_json, char** out, int* fully_witnessed);

/* Witness search on the edge st + [0, steps] * (-sigma, rho);
 * st = "A,B", dir = "R,S". *found = 1 when a witness exists. */
int jnp_cmd_witness_search(const char* st, const char* dir, long steps, char** out, int* found);

/* Named witness family, params like "k=1,j=2" (values may be rational). */
int jnp_cmd_family_emit(const char* name, const char* params, char** out);

#ifdef __cplusplus
}
#endif

#endif /* JNPOLY_H */
