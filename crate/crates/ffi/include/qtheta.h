#ifndef QTHETA_H
#define QTHETA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum QtStatus {
  QT_STATUS_OK = 0,
  QT_STATUS_NULL_POINTER = 1,
  QT_STATUS_INVALID_ARGUMENT = 2,
  QT_STATUS_PARSE = 3,
  QT_STATUS_DOMAIN = 4,
  QT_STATUS_UNKNOWN_ID = 5,
  QT_STATUS_PANIC = 6,
} QtStatus;

/**
 * Verdict of one identity.
 */
typedef enum QtVerdict {
  QT_VERDICT_PASS = 0,
  QT_VERDICT_FAIL = 1,
  QT_VERDICT_EVIDENCE = 2,
  QT_VERDICT_ERROR = 3,
} QtVerdict;

/**
 * Result of a verification run.
 */
typedef struct QtReport QtReport;

/**
 * Exact truncated q-series.
 */
typedef struct QtSeries QtSeries;

/**
 * Complex number passed by value.
 */
typedef struct QtComplex {
  double re;
  double im;
} QtComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or "" after a success.
 */
const char *qt_last_error(void);

/**
 * Library version, e.g. "0.1.0".
 */
const char *qt_version(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qt_string_free(char *s);

/**
 * Expand `expression` through `steps` powers of q past its leading term.
 *
 * # Safety
 * `expression` must be a NUL-terminated string; `out_series` must be writable.
 */
enum QtStatus qt_series_expand(const char *expression, int64_t steps, struct QtSeries **out_series);

/**
 * Product of two series, known to the smaller of their orders.
 *
 * # Safety
 * `a` and `b` must be live series handles; `out_series` must be writable.
 */
enum QtStatus qt_series_mul(const struct QtSeries *a,
                            const struct QtSeries *b,
                            struct QtSeries **out_series);

/**
 * Whether `a` and `b` agree up to the smaller of their orders.
 *
 * # Safety
 * `a` and `b` must be live series handles; `equal` must be writable.
 */
enum QtStatus qt_series_equal(const struct QtSeries *a, const struct QtSeries *b, bool *equal);

/**
 * Number of nonzero terms.
 *
 * # Safety
 * `s` must be a live series handle; `count` must be writable.
 */
enum QtStatus qt_series_term_count(const struct QtSeries *s, size_t *count);

/**
 * Coefficient of `q^(num/den)` as a reduced fraction string such as "-24"
 * or "3/5". Fails when the exponent lies at or beyond the known order.
 *
 * # Safety
 * `s` must be a live series handle; `coefficient` must be writable.
 */
enum QtStatus qt_series_coefficient(const struct QtSeries *s,
                                    int64_t num,
                                    int64_t den,
                                    char **coefficient);

/**
 * Terms as "e: c, e: c, ...", or "0" for the zero series.
 *
 * # Safety
 * `s` must be a live series handle; `listing` must be writable.
 */
enum QtStatus qt_series_to_string(const struct QtSeries *s, char **listing);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qt_series_free(struct QtSeries *s);

/**
 * `θj(z | τ)` for `j` in 1..=4.
 *
 * # Safety
 * `value` must be writable.
 */
enum QtStatus qt_theta(uint8_t j,
                       struct QtComplex z,
                       struct QtComplex tau,
                       struct QtComplex *value);

/**
 * `η(τ)`.
 *
 * # Safety
 * `value` must be writable.
 */
enum QtStatus qt_eta(struct QtComplex tau, struct QtComplex *value);

/**
 * `℘(z | τ)`.
 *
 * # Safety
 * `value` must be writable.
 */
enum QtStatus qt_wp(struct QtComplex z, struct QtComplex tau, struct QtComplex *value);

/**
 * Rogers–Ramanujan continued fraction `R(τ)`.
 *
 * # Safety
 * `value` must be writable.
 */
enum QtStatus qt_rrcf(struct QtComplex tau, struct QtComplex *value);

/**
 * Number of identities in the catalog.
 */
size_t qt_registry_len(void);

/**
 * Id of catalog entry `index`, or null when out of range.
 */
const char *qt_registry_id(size_t index);

/**
 * Verify one identity. `order <= 0` keeps the record's default order and
 * `tolerance <= 0` the default tolerance.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `verdict` must be writable.
 */
enum QtStatus qt_verify(const char *id,
                        int64_t order,
                        uint64_t seed,
                        double tolerance,
                        enum QtVerdict *verdict);

/**
 * Verify the whole catalog with default orders. Timings are zeroed, so the
 * JSON form depends only on `seed` and `tolerance`.
 *
 * # Safety
 * `out_report` must be writable.
 */
enum QtStatus qt_verify_all(uint64_t seed, double tolerance, struct QtReport **out_report);

/**
 * Number of rows in a report.
 *
 * # Safety
 * `report` must be a live report handle; `count` must be writable.
 */
enum QtStatus qt_report_len(const struct QtReport *report, size_t *count);

/**
 * Verdict of row `index`.
 *
 * # Safety
 * `report` must be a live report handle; `verdict` must be writable.
 */
enum QtStatus qt_report_verdict(const struct QtReport *report,
                                size_t index,
                                enum QtVerdict *verdict);

/**
 * Whether every row passed or counts as evidence.
 *
 * # Safety
 * `report` must be a live report handle; `succeeded` must be writable.
 */
enum QtStatus qt_report_succeeded(const struct QtReport *report, bool *succeeded);

/**
 * The report as pretty-printed JSON.
 *
 * # Safety
 * `report` must be a live report handle; `json` must be writable.
 */
enum QtStatus qt_report_json(const struct QtReport *report, char **json);

/**
 * # Safety
 * `report` must come from this library and not have been freed.
 */
void qt_report_free(struct QtReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTHETA_H */
