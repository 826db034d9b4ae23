#ifndef SPARING_H
#define SPARING_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SparingStatus {
  SPARING_STATUS_OK = 0,
  SPARING_STATUS_NULL_POINTER = 1,
  SPARING_STATUS_INVALID_STRING = 2,
  SPARING_STATUS_PARSE_ERROR = 3,
  SPARING_STATUS_INVALID_INPUT = 4,
  SPARING_STATUS_TOO_LARGE = 5,
  SPARING_STATUS_IO = 6,
  SPARING_STATUS_INTERNAL = 7,
} SparingStatus;

typedef enum SparingMethod {
  // Corona decomposition for corona graphs, branch and bound otherwise.
  SPARING_METHOD_AUTO = 0,
  SPARING_METHOD_BRUTE_FORCE = 1,
  SPARING_METHOD_MWIS = 2,
  SPARING_METHOD_CORONA = 3,
} SparingMethod;

typedef enum SparingVariant {
  SPARING_VARIANT_PRINTED = 0,
  SPARING_VARIANT_DERIVED = 1,
} SparingVariant;

// Opaque graph handle.
typedef struct SparingGraph SparingGraph;

// Opaque solver result handle.
typedef struct SparingResult SparingResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null if none.
// Release it with `sparing_string_free`.
char *sparing_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void sparing_string_free(char *s);

// Builds a graph from a spec string such as `corona(cycle:3,path:2)`.
//
// # Safety
// `spec` must be a valid nul-terminated string and `out` a valid pointer.
enum SparingStatus sparing_graph_from_spec(const char *spec, struct SparingGraph **out);

// Builds a graph from DIMACS-like text (`p edge n m` then `e u v` lines).
//
// # Safety
// `text` must be a valid nul-terminated string and `out` a valid pointer.
enum SparingStatus sparing_graph_from_dimacs(const char *text, struct SparingGraph **out);

// # Safety
// `graph` must be null or a handle from this library, not yet freed.
void sparing_graph_free(struct SparingGraph *graph);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle.
size_t sparing_graph_vertex_count(const struct SparingGraph *graph);

// Edge count, or 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle.
size_t sparing_graph_edge_count(const struct SparingGraph *graph);

// Computes the sparing number. `node_limit` of 0 means unlimited.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum SparingStatus sparing_solve(const struct SparingGraph *graph,
                                 enum SparingMethod method,
                                 uint64_t node_limit,
                                 struct SparingResult **out);

// # Safety
// `result` must be null or a handle from this library, not yet freed.
void sparing_result_free(struct SparingResult *result);

// Mono-indexed edge count of the witness; the sparing number when optimal.
//
// # Safety
// `result` must be a live handle.
uint64_t sparing_result_value(const struct SparingResult *result);

// False when a search budget ran out before optimality was proven.
//
// # Safety
// `result` must be a live handle.
bool sparing_result_optimal(const struct SparingResult *result);

// Whether vertex `v` is non-mono in the witness.
//
// # Safety
// `result` must be a live handle and `out` a valid pointer.
enum SparingStatus sparing_result_is_nonmono(const struct SparingResult *result,
                                             size_t v,
                                             bool *out);

// Evaluates a closed form as the exact fraction `num / den` (den > 0).
//
// # Safety
// `theorem` must be a valid string, `params` must point to `len` values
// (or be null with `len == 0`), and `num`, `den` must be valid pointers.
enum SparingStatus sparing_formula_eval(const char *theorem,
                                        const int64_t *params,
                                        size_t len,
                                        enum SparingVariant variant,
                                        int64_t *num,
                                        int64_t *den);

// Runs the conformance grid and returns the CSV report in `out_csv`.
// `grid_json` may be null for the default grid. `all_claims_hold` may be
// null; otherwise it receives whether every closed form held.
//
// # Safety
// Non-null pointers must be valid; `out_csv` must not be null.
enum SparingStatus sparing_verify_csv(const char *grid_json, char **out_csv, bool *all_claims_hold);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPARING_H */
