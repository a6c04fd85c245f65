/* C interface to the qfl polynomial toolkit.
 *
 * Maintained by hand; must match crates/qfl-ffi/src/lib.rs.
 *
 * Ownership: every QflPoly* is released with qfl_poly_free, every char*
 * returned through an out parameter with qfl_string_free.
 */

#ifndef QFL_H
#define QFL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. */
#define QFL_OK 0
/* Invalid argument: unknown kind/suite, unparsable rational, bad base. */
#define QFL_ERR_DOMAIN 1
/* The requested verification ran and found a failing identity. */
#define QFL_ERR_VERIFY 2
/* A required pointer argument was null. */
#define QFL_ERR_NULL 3
/* A string argument was not valid UTF-8. */
#define QFL_ERR_UTF8 4

/* Opaque polynomial handle. */
typedef struct QflPoly QflPoly;

/* Build family member n. kind is a family name ("fib", "qlucas", "rfib",
 * ...); q is an exact rational "p/q" used only by the fixed-base kinds and
 * may be NULL otherwise. On success writes a new handle to out. */
int32_t qfl_family_build(const char *kind, uint32_t n, const char *q,
                         QflPoly **out);

/* Release a polynomial handle; NULL is a no-op. */
void qfl_poly_free(QflPoly *p);

/* Exact evaluation at rational (x, s, q), each written "p/q"; the result
 * string (also "p/q") is written to out. */
int32_t qfl_poly_eval(const QflPoly *poly, const char *x, const char *s,
                      const char *q, char **out);

/* Serialize the polynomial's term table as JSON. */
int32_t qfl_poly_to_json(const QflPoly *poly, char **out);

/* Run a verification suite (names as in the CLI: "all", "classical",
 * "qcore", "families", "hyper", "gf", "fourier", "section5"). Writes the
 * JSON report to out whenever the suite could run. Returns QFL_OK when
 * every identity passed, QFL_ERR_VERIFY when some failed. */
int32_t qfl_verify_suite(const char *suite, uint32_t n_max, size_t nodes,
                         double tol, char **out);

/* Check one Fourier transform case; kind is "qfib" or "qlucas". Writes the
 * result JSON to out whether or not the check passes. */
int32_t qfl_fourier_check(const char *kind, uint32_t n, double a, double s,
                          double q, double y, size_t nodes, double tol,
                          char **out);

/* Release a string produced by this library; NULL is a no-op. */
void qfl_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* QFL_H */
