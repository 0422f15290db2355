#ifndef LCHI_H
#define LCHI_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum LchiStatus {
  LCHI_STATUS_OK = 0,
  LCHI_STATUS_PARSE = 1,
  LCHI_STATUS_DOMAIN = 2,
  LCHI_STATUS_BUDGET = 3,
  LCHI_STATUS_NULL_ARGUMENT = 4,
  LCHI_STATUS_PANIC = 5,
} LchiStatus;

/**
 * A periodic function.
 */
typedef struct LchiChi LchiChi;

/**
 * Table of `Psi_chi(X^m)`, `m = 0..=max_degree`.
 */
typedef struct LchiPsiTable LchiPsiTable;

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *lchi_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void lchi_string_free(char *s);

/**
 * Parses `chi3`, `chi4`, `one` or `period=N;values=v1,...,vN`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum LchiStatus lchi_chi_parse(const char *text, struct LchiChi **out);

/**
 * # Safety
 * `chi` must come from [`lchi_chi_parse`] and not have been freed.
 */
void lchi_chi_free(struct LchiChi *chi);

/**
 * # Safety
 * `chi` must be a live handle; `out` must be writable.
 */
enum LchiStatus lchi_psi_table_new(const struct LchiChi *chi,
                                   size_t max_degree,
                                   struct LchiPsiTable **out);

/**
 * # Safety
 * `table` must come from [`lchi_psi_table_new`] and not have been freed.
 */
void lchi_psi_table_free(struct LchiPsiTable *table);

/**
 * `Psi_chi(X^m)` as `num/den`; release with [`lchi_string_free`].
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum LchiStatus lchi_psi_moment(const struct LchiPsiTable *table, size_t m, char **out);

/**
 * Exact `L_{A,chi,P}(1 - m)` as `num/den`; `poly` lists coefficients
 * lowest degree first, e.g. `"0,1,1"`.
 *
 * # Safety
 * `chi` must be a live handle, `poly` NUL-terminated, `out` writable.
 */
enum LchiStatus lchi_l_negative(const struct LchiChi *chi,
                                const char *poly,
                                uint64_t offset_a,
                                uint32_t m,
                                char **out);

/**
 * Numeric `L_{chi,P}(s)`. `eps` and `max_terms` bound the remainder sum.
 *
 * # Safety
 * `chi` must be a live handle, `poly` NUL-terminated, `out_re` and `out_im` writable.
 */
enum LchiStatus lchi_eval(const struct LchiChi *chi,
                          const char *poly,
                          double s_re,
                          double s_im,
                          double eps,
                          uint64_t max_terms,
                          double *out_re,
                          double *out_im);

/**
 * Congruence scan for the family `Psi_chi((X(X+u))^m) / m` modulo `p`,
 * returned as a JSON object; release with [`lchi_string_free`].
 *
 * # Safety
 * `chi` must be a live handle; `out` must be writable.
 */
enum LchiStatus lchi_congruence_json(const struct LchiChi *chi,
                                     uint64_t p,
                                     size_t periods,
                                     char **out);

#endif  /* LCHI_H */
