#ifndef G2SPLIT_H
#define G2SPLIT_H

/* C interface to the g2split library. Every call returns a status code; on
 * failure the session keeps a message and, for undefined evaluations, a
 * machine-readable kind such as "NoGenus2Field". Strings returned through
 * out-parameters are owned by the caller and released with g2s_string_free.
 *
 * Scalars are passed as text: rationals "a/b", quadratic irrationals
 * "a+b*sqrt(d)", GF(p^k) elements "[c0,c1,...]". A field argument of NULL or ""
 * means Q, or Q(sqrt(d)) when some input mentions sqrt; "GF(p)" and "GF(p^k)"
 * select a finite field. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  G2S_OK = 0,
  G2S_PARSE_ERROR = 1,
  G2S_DOMAIN_MISMATCH = 2,
  G2S_DENOMINATOR_VANISHES = 3,
  G2S_DENOMINATOR_NOT_UNIT = 4,
  G2S_INVALID_ARGUMENT = 5,
  G2S_UNKNOWN_VARIABLE = 6,
  G2S_UNDEFINED = 7,
  G2S_INSUFFICIENT_POINTS = 8,
  G2S_IO_ERROR = 9,
  G2S_INTERNAL_ERROR = 100
} g2s_status;

typedef struct g2s_session g2s_session;
typedef struct g2s_poly g2s_poly;

g2s_status g2s_session_new(g2s_session** out);
void g2s_session_free(g2s_session* session);

/* Seed for sampled checks (default 2), numeric precision in decimal digits
 * (default 60), prime for the minor check (default 10007). */
g2s_status g2s_set_seed(g2s_session* session, uint64_t seed);
g2s_status g2s_set_precision(g2s_session* session, unsigned digits);
g2s_status g2s_set_prime(g2s_session* session, uint64_t prime);

/* Message and kind of the last failure; "" after a successful call. */
const char* g2s_last_error(const g2s_session* session);
const char* g2s_last_error_kind(const g2s_session* session);
const char* g2s_status_name(g2s_status status);

void g2s_string_free(char* text);

/* {J2,J4,J6,J10,i1,i2,i3} of the sextic with ascending coefficients a0..a6. */
g2s_status g2s_invariants(g2s_session* session, const char* const coefficients[7], const char* field, char** json_out);

/* {H,r1,r2,r3} of a cubic pair, ascending coefficients. */
g2s_status g2s_cubic_pair(g2s_session* session, const char* const f[4], const char* const g[4], const char* field,
                          char** json_out);

/* Sextic and cubic pair of the (u, v) family. */
g2s_status g2s_curve_from_uv(g2s_session* session, const char* u, const char* v, const char* field, char** json_out);

g2s_status g2s_theta(g2s_session* session, const char* u, const char* v, const char* field, char** json_out);
g2s_status g2s_uv_to_r(g2s_session* session, const char* u, const char* v, const char* field, char** json_out);
g2s_status g2s_rho(g2s_session* session, const char* r1, const char* r2, const char* field, char** json_out);

/* JSON array of the surface names accepted below. */
g2s_status g2s_surface_names(g2s_session* session, char** json_out);

/* {surface, field, value}. */
g2s_status g2s_surface_eval(g2s_session* session, const char* surface, const char* const* point, size_t n,
                            const char* field, char** json_out);

/* Gradient report of a surface at an (x, y, z) point. Exact unless numeric is
 * nonzero, in which case the session precision is used. */
g2s_status g2s_singular(g2s_session* session, const char* surface, const char* const point[3], int numeric,
                        const char* field, char** json_out);

/* {x, y, z} with z from the (x, y) relation. */
g2s_status g2s_z_from_xy(g2s_session* session, const char* x, const char* y, const char* field, char** json_out);

/* Classification of an (x, y, z) point by the C1/C2 loci. */
g2s_status g2s_classify(g2s_session* session, const char* const point[3], const char* field, char** json_out);

/* JSON array of check ids. */
g2s_status g2s_check_ids(g2s_session* session, char** json_out);

/* Runs one check ("all" for every check) and writes the suite report.
 * *failed is set to 1 when some check has status "fail". */
g2s_status g2s_verify(g2s_session* session, const char* id, char** json_out, int* failed);

/* CSV "i1,i2,i3,param1,param2" for surface "s3_via_theta" or "s2_via_oracle".
 * skipped_out (optional) receives a JSON array of skipped grid points. */
g2s_status g2s_sample(g2s_session* session, const char* surface, const char* lo1, const char* hi1, const char* step1,
                      const char* lo2, const char* hi2, const char* step2, char** csv_out, char** skipped_out);

/* Polynomials over Q, GF(p) or GF(p^k). */
g2s_status g2s_poly_parse(g2s_session* session, const char* text, g2s_poly** out);
g2s_status g2s_poly_parse_infix(g2s_session* session, const char* text, g2s_poly** out);
g2s_status g2s_poly_from_catalog(g2s_session* session, const char* name, g2s_poly** out);
void g2s_poly_free(g2s_poly* poly);
g2s_status g2s_poly_to_text(g2s_session* session, const g2s_poly* poly, char** text_out);
g2s_status g2s_poly_to_infix(g2s_session* session, const g2s_poly* poly, char** text_out);
g2s_status g2s_poly_reduce_mod_p(g2s_session* session, const g2s_poly* poly, uint64_t prime, g2s_poly** out);
/* Value at a point given in variable order, in the polynomial's own field. */
g2s_status g2s_poly_eval(g2s_session* session, const g2s_poly* poly, const char* const* point, size_t n, char** value_out);

#ifdef __cplusplus
}
#endif

#endif
