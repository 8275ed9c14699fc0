#ifndef TREE_DESCENT_H
#define TREE_DESCENT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TdStatus {
  TD_STATUS_OK = 0,
  TD_STATUS_NULL_POINTER = 1,
  TD_STATUS_INVALID_INPUT = 2,
  TD_STATUS_CAP_EXCEEDED = 3,
  TD_STATUS_OUT_OF_RANGE = 4,
  TD_STATUS_OVERFLOW = 5,
  TD_STATUS_INTERNAL = 99,
} TdStatus;

typedef enum TdAlgorithm {
  TD_ALGORITHM_AUTO = 0,
  TD_ALGORITHM_BRUTE = 1,
  TD_ALGORITHM_DELETION = 2,
  TD_ALGORITHM_RANK_DP = 3,
} TdAlgorithm;

/*
 Opaque rooted forest.
 */
typedef struct TdForest TdForest;

/*
 Opaque descent polynomial.
 */
typedef struct TdPolynomial TdPolynomial;

/*
 First violation index for each property, or -1 when it holds.
 */
typedef struct TdChecks {
  int64_t symmetry_violation;
  int64_t unimodality_violation;
  int64_t log_concavity_violation;
} TdChecks;

/*
 Closed-form moments in double precision.
 */
typedef struct TdMoments {
  double mean;
  double variance;
  /*
   NaN unless the input is a tree on at least two vertices.
   */
  double variance_lower_bound;
} TdMoments;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty after a success.
 Valid until the next call on the same thread.
 */
const char *td_last_error_message(void);

/*
 Library version as a static string.
 */
const char *td_version(void);

/*
 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void td_string_free(char *s);

/*
 Parses a parent array such as `"5 5 4 6 6 0"`.

 # Safety
 `text` must be a nul-terminated string and `out` a writable pointer.
 */
enum TdStatus td_forest_from_parents(const char *text, struct TdForest **out);

/*
 Parses nested parentheses such as `"((()())(()))"`.

 # Safety
 `text` must be a nul-terminated string and `out` a writable pointer.
 */
enum TdStatus td_forest_from_nested(const char *text, struct TdForest **out);

/*
 Builds a family member from a spec such as `"dary:2:127"`.

 # Safety
 `spec` must be a nul-terminated string and `out` a writable pointer.
 */
enum TdStatus td_forest_from_family(const char *spec, struct TdForest **out);

/*
 # Safety
 `f` must be null or a live handle from this library.
 */
void td_forest_free(struct TdForest *f);

/*
 Vertex count, or 0 for a null handle.

 # Safety
 `f` must be null or a live handle.
 */
size_t td_forest_size(const struct TdForest *f);

/*
 Edge count, or 0 for a null handle.

 # Safety
 `f` must be null or a live handle.
 */
size_t td_forest_edge_count(const struct TdForest *f);

/*
 Nested-parentheses form of the forest.

 # Safety
 `f` must be a live handle and `out` a writable pointer.
 */
enum TdStatus td_forest_to_nested(const struct TdForest *f, char **out);

/*
 Computes the descent polynomial. `brute_cap` bounds the brute-force engine
 and is ignored by the others.

 # Safety
 `f` must be a live handle and `out` a writable pointer.
 */
enum TdStatus td_descent_poly(const struct TdForest *f,
                              enum TdAlgorithm algorithm,
                              size_t brute_cap,
                              struct TdPolynomial **out);

/*
 # Safety
 `p` must be null or a live handle from this library.
 */
void td_poly_free(struct TdPolynomial *p);

/*
 Number of coefficients (edges + 1), or 0 for a null handle.

 # Safety
 `p` must be null or a live handle.
 */
size_t td_poly_len(const struct TdPolynomial *p);

/*
 Coefficient `k` as a `uint64_t`; `Overflow` when it does not fit.

 # Safety
 `p` must be a live handle and `out` a writable pointer.
 */
enum TdStatus td_poly_coeff_u64(const struct TdPolynomial *p, size_t k, uint64_t *out);

/*
 Coefficient `k` in decimal.

 # Safety
 `p` must be a live handle and `out` a writable pointer.
 */
enum TdStatus td_poly_coeff_string(const struct TdPolynomial *p, size_t k, char **out);

/*
 JSON document `{"n":..,"edges":..,"coeffs":[..]}`; `n` is the vertex count.

 # Safety
 `p` must be a live handle and `out` a writable pointer.
 */
enum TdStatus td_poly_to_json(const struct TdPolynomial *p, size_t n, char **out);

/*
 Symmetry, unimodality and log-concavity of the coefficients.

 # Safety
 `p` must be a live handle and `out` a writable pointer.
 */
enum TdStatus td_poly_check(const struct TdPolynomial *p, struct TdChecks *out);

/*
 Closed-form mean, variance and variance lower bound.

 # Safety
 `f` must be a live handle and `out` a writable pointer.
 */
enum TdStatus td_moments(const struct TdForest *f, struct TdMoments *out);

/*
 Exact closed-form variance as `"num/den"` (or an integer).

 # Safety
 `f` must be a live handle and `out` a writable pointer.
 */
enum TdStatus td_variance_exact(const struct TdForest *f, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TREE_DESCENT_H */
