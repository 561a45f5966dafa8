#ifndef SUBISO_H
#define SUBISO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SiAlgorithm {
  SI_ALGORITHM_AUTO = 0,
  SI_ALGORITHM_P4FREE = 1,
  SI_ALGORITHM_P4KP3 = 2,
  SI_ALGORITHM_VI = 3,
  SI_ALGORITHM_HITTING = 4,
  SI_ALGORITHM_ND = 5,
  SI_ALGORITHM_ORACLE = 6,
} SiAlgorithm;

typedef enum SiAnswer {
  SI_ANSWER_YES = 0,
  SI_ANSWER_NO = 1,
  SI_ANSWER_UNKNOWN = 2,
} SiAnswer;

typedef enum SiStatus {
  SI_STATUS_OK = 0,
  /**
   * A required pointer was null or a value was out of range.
   */
  SI_STATUS_INVALID_ARGUMENT = 1,
  SI_STATUS_PARSE = 2,
  SI_STATUS_INVALID_INPUT = 3,
  /**
   * An input lies outside the class the chosen solver handles.
   */
  SI_STATUS_CLASS_VIOLATION = 4,
  SI_STATUS_IO = 5,
  /**
   * A bug inside the library; the message carries the panic text.
   */
  SI_STATUS_INTERNAL = 6,
} SiStatus;

/**
 * Opaque graph handle.
 */
typedef struct SiGraph SiGraph;

/**
 * Opaque solve result handle.
 */
typedef struct SiResult SiResult;

/**
 * Solver options. Obtain defaults from [`si_solve_options_default`].
 */
typedef struct SiSolveOptions {
  enum SiAlgorithm algorithm;
  /**
   * Class parameter, or -1 for none.
   */
  int64_t param;
  uint64_t seed;
  uint32_t repeats;
  uint64_t budget;
  /**
   * Let `auto` fall back to the oracle on unresolved cases.
   */
  bool fallback;
  /**
   * Forbidden linear forest as path orders; may be null when
   * `forbidden_len` is 0.
   */
  const size_t *forbidden;
  size_t forbidden_len;
} SiSolveOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *si_last_error_message(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (0-based endpoints).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0) and `out` must be writable.
 */
enum SiStatus si_graph_new(size_t n, const size_t *edges, size_t edge_count, struct SiGraph **out);

/**
 * Parses a graph in the `p si <n> <m>` / `e <u> <v>` text format.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum SiStatus si_graph_parse(const char *text, struct SiGraph **out);

/**
 * Reads a graph file in the text format.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out` writable.
 */
enum SiStatus si_graph_read_file(const char *path, struct SiGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be freed yet, or be null.
 */
void si_graph_free(struct SiGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null (returns 0).
 */
size_t si_graph_vertex_count(const struct SiGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null (returns 0).
 */
size_t si_graph_edge_count(const struct SiGraph *g);

/**
 * The graph in text format; free with [`si_string_free`]. Null on a null
 * handle.
 *
 * # Safety
 * `g` must be a live graph handle or null.
 */
char *si_graph_to_string(const struct SiGraph *g);

/**
 * # Safety
 * `s` must come from this library and not be freed yet, or be null.
 */
void si_string_free(char *s);

struct SiSolveOptions si_solve_options_default(void);

/**
 * Decides whether `pattern` is a subgraph of `host`. Budget exhaustion is
 * not an error: the result answers [`SiAnswer::Unknown`].
 *
 * # Safety
 * `host` and `pattern` must be live graph handles, `options` null or a
 * valid options struct whose `forbidden` array is readable, and `out`
 * writable.
 */
enum SiStatus si_solve(const struct SiGraph *host,
                       const struct SiGraph *pattern,
                       const struct SiSolveOptions *options,
                       struct SiResult **out);

/**
 * # Safety
 * `r` must be a live result handle or null (answers unknown).
 */
enum SiAnswer si_result_answer(const struct SiResult *r);

/**
 * Copies up to `capacity` host vertices of the embedding (one per pattern
 * vertex, 0-based) into `buf` and returns the embedding length, which is 0
 * unless the answer is yes.
 *
 * # Safety
 * `r` must be a live result handle or null; `buf` must have room for
 * `capacity` values (may be null when `capacity` is 0).
 */
size_t si_result_embedding(const struct SiResult *r, size_t *buf, size_t capacity);

/**
 * # Safety
 * `r` must be a live result handle or null (returns 0).
 */
uint64_t si_result_guesses_explored(const struct SiResult *r);

/**
 * The result as JSON; free with [`si_string_free`].
 *
 * # Safety
 * `r` must be a live result handle or null (returns null).
 */
char *si_result_to_json(const struct SiResult *r);

/**
 * # Safety
 * `r` must come from this library and not be freed yet, or be null.
 */
void si_result_free(struct SiResult *r);

/**
 * True iff `map` (one host vertex per pattern vertex) is an injective,
 * edge-preserving map from `pattern` into `host`.
 *
 * # Safety
 * Handles must be live or null (returns false); `map` must hold `len`
 * readable values.
 */
bool si_verify_embedding(const struct SiGraph *host,
                         const struct SiGraph *pattern,
                         const size_t *map,
                         size_t len);

/**
 * # Safety
 * `g` must be a live graph handle or null (returns false).
 */
bool si_is_p4_free(const struct SiGraph *g);

/**
 * Vertex integrity if it is at most `max_k`, else -1.
 *
 * # Safety
 * `g` must be a live graph handle or null (returns -1).
 */
int64_t si_vertex_integrity(const struct SiGraph *g, size_t max_k);

/**
 * Size of a smallest `P4`-hitting set if it is at most `max_k`, else -1.
 *
 * # Safety
 * `g` must be a live graph handle or null (returns -1).
 */
int64_t si_p4_hitting_number(const struct SiGraph *g, size_t max_k);

/**
 * Number of twin classes.
 *
 * # Safety
 * `g` must be a live graph handle or null (returns 0).
 */
size_t si_neighborhood_diversity(const struct SiGraph *g);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBISO_H */
