/* shufsort -- disorder-aware shuffling and adaptive sorting, C API.
 *
 * All functions that can fail return a shufsort_status; SHUFSORT_OK is 0.
 * A human-readable detail for the most recent failure on the calling thread
 * is available via shufsort_last_error(). Objects returned through
 * `out` parameters are owned by the caller and must be released with the
 * matching *_free function. Strings returned through `char**` out
 * parameters must be released with shufsort_string_free().
 */

#ifndef SHUFSORT_H
#define SHUFSORT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(SHUFSORT_SHARED)
#  ifdef SHUFSORT_BUILD
#    define SHUFSORT_API __declspec(dllexport)
#  else
#    define SHUFSORT_API __declspec(dllimport)
#  endif
#else
#  define SHUFSORT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define SHUFSORT_VERSION_MAJOR 0
#define SHUFSORT_VERSION_MINOR 1
#define SHUFSORT_VERSION_PATCH 0

SHUFSORT_API const char* shufsort_version(void);

typedef enum shufsort_status {
  SHUFSORT_OK = 0,
  SHUFSORT_ERR_INVALID_ARGUMENT = 1,
  SHUFSORT_ERR_DUPLICATE_KEYS = 2,
  SHUFSORT_ERR_PARSE = 3,
  SHUFSORT_ERR_IO = 4,
  SHUFSORT_ERR_LIMIT = 5,
  SHUFSORT_ERR_INTERNAL = 6
} shufsort_status;

/* Static name of a status code ("ok", "invalid_argument", ...). */
SHUFSORT_API const char* shufsort_status_name(int status);

/* Detail message for the last failure on this thread; empty string if none. */
SHUFSORT_API const char* shufsort_last_error(void);

SHUFSORT_API void shufsort_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Key sequences: arrays of mutually distinct 64-bit integer keys.     */
/* ------------------------------------------------------------------ */

typedef struct shufsort_seq shufsort_seq;

SHUFSORT_API shufsort_status shufsort_seq_create(const int64_t* keys, size_t len,
                                                 shufsort_seq** out);
SHUFSORT_API void shufsort_seq_free(shufsort_seq* seq);
SHUFSORT_API size_t shufsort_seq_len(const shufsort_seq* seq);
SHUFSORT_API shufsort_status shufsort_seq_clone(const shufsort_seq* seq, shufsort_seq** out);
/* Copies all keys into `out`, which must hold at least shufsort_seq_len slots. */
SHUFSORT_API shufsort_status shufsort_seq_copy_keys(const shufsort_seq* seq, int64_t* out,
                                                    size_t cap);
SHUFSORT_API shufsort_status shufsort_seq_swap(shufsort_seq* seq, size_t i, size_t j);

/* File format: one decimal key per line ("\n" separated); blank lines ignored. */
SHUFSORT_API shufsort_status shufsort_seq_read_file(const char* path, shufsort_seq** out);
SHUFSORT_API shufsort_status shufsort_seq_write_file(const shufsort_seq* seq, const char* path);

/* ------------------------------------------------------------------ */
/* Disorder: the number of descents (adjacent pairs with keys[i] >     */
/* keys[i+1]); ranges 0 (ascending) to n-1 (descending).               */
/* ------------------------------------------------------------------ */

SHUFSORT_API shufsort_status shufsort_disorder(const shufsort_seq* seq, uint64_t* out);

/* Number of maximal strictly ascending runs: disorder + 1 for n >= 1, else 0. */
SHUFSORT_API shufsort_status shufsort_run_count(const shufsort_seq* seq, uint64_t* out);

/* Disorder change that swapping positions i < j would cause, without mutating. */
SHUFSORT_API shufsort_status shufsort_swap_disorder_delta(const shufsort_seq* seq,
                                                          size_t i, size_t j, int* delta);

/* Balanced contiguous split into `parts` pieces (n singletons when parts > n).
 * Writes per-part disorders (internal adjacencies only) and the whole-sequence
 * disorder. `per_part` must hold at least min(parts, len) slots. */
SHUFSORT_API shufsort_status shufsort_part_disorders(const shufsort_seq* seq, uint32_t parts,
                                                     uint64_t* per_part, size_t per_part_cap,
                                                     size_t* part_count, uint64_t* total);

/* ------------------------------------------------------------------ */
/* Deterministic randomness: splitmix64 streams.                       */
/* ------------------------------------------------------------------ */

typedef struct shufsort_rng shufsort_rng;

SHUFSORT_API shufsort_status shufsort_rng_create(uint64_t seed, shufsort_rng** out);
SHUFSORT_API void shufsort_rng_free(shufsort_rng* rng);
SHUFSORT_API uint64_t shufsort_rng_next(shufsort_rng* rng);
/* Unbiased draw in [0, bound); bound must be >= 1. */
SHUFSORT_API shufsort_status shufsort_rng_below(shufsort_rng* rng, uint64_t bound, uint64_t* out);
/* Uniform unordered pair of distinct indices in [0, len), returned with i < j. */
SHUFSORT_API shufsort_status shufsort_rng_draw_pair(shufsort_rng* rng, size_t len,
                                                    size_t* i, size_t* j);
/* Pinned sub-stream seed derivation (one splitmix64 step over a mixed master). */
SHUFSORT_API uint64_t shufsort_subseed(uint64_t master, uint64_t index);

/* ------------------------------------------------------------------ */
/* Shuffle preprocessing.                                               */
/* ------------------------------------------------------------------ */

typedef enum shufsort_policy {
  SHUFSORT_POLICY_BLIND = 0,   /* apply every drawn swap */
  SHUFSORT_POLICY_GUARDED = 1, /* apply a swap only if it reduces the part's disorder */
  SHUFSORT_POLICY_FIXED = 2    /* apply exactly fixed_swaps unconditional swaps */
} shufsort_policy;

typedef struct shufsort_shuffle_config {
  uint32_t parts;          /* k: number of contiguous parts, >= 1 */
  uint64_t threshold;      /* z: shuffle only parts with disorder > z */
  uint32_t budget_divisor; /* m: swap budget per flagged part = floor(part_len / m), >= 1 */
  int policy;              /* shufsort_policy */
  uint64_t fixed_swaps;    /* swap count when policy is SHUFSORT_POLICY_FIXED */
  uint64_t seed;           /* master seed; part p uses shufsort_subseed(seed, p) */
} shufsort_shuffle_config;

/* Defaults: parts=16, threshold=10, budget_divisor=2, guarded, fixed_swaps=2, seed=1. */
SHUFSORT_API void shufsort_shuffle_config_init(shufsort_shuffle_config* cfg);

typedef struct shufsort_shuffle_report shufsort_shuffle_report;

/* Shuffles flagged parts of `seq` in place per `cfg`; `out` receives the report. */
SHUFSORT_API shufsort_status shufsort_preprocess(shufsort_seq* seq,
                                                 const shufsort_shuffle_config* cfg,
                                                 shufsort_shuffle_report** out);

SHUFSORT_API void shufsort_shuffle_report_free(shufsort_shuffle_report* rep);
SHUFSORT_API uint64_t shufsort_shuffle_report_total_before(const shufsort_shuffle_report* rep);
SHUFSORT_API uint64_t shufsort_shuffle_report_total_after(const shufsort_shuffle_report* rep);
SHUFSORT_API uint64_t shufsort_shuffle_report_elapsed_ns(const shufsort_shuffle_report* rep);
SHUFSORT_API size_t shufsort_shuffle_report_part_count(const shufsort_shuffle_report* rep);
SHUFSORT_API shufsort_status shufsort_shuffle_report_part(const shufsort_shuffle_report* rep,
                                                          size_t index,
                                                          uint64_t* disorder_before,
                                                          uint64_t* disorder_after,
                                                          uint64_t* swaps_attempted,
                                                          uint64_t* swaps_applied);

/* ------------------------------------------------------------------ */
/* Sorting. All entry points sort `seq` in place to strictly ascending  */
/* order and fill `stats`; comparisons are counted through a single     */
/* counting comparator.                                                 */
/* ------------------------------------------------------------------ */

typedef struct shufsort_sort_stats {
  uint64_t comparisons;
  uint64_t moves;
  uint64_t runs_detected; /* disorder(input) + 1 for n >= 1, else 0 */
  uint64_t elapsed_ns;
} shufsort_sort_stats;

/* Natural merge sort: run decomposition + round-based pairwise merging. */
SHUFSORT_API shufsort_status shufsort_adaptive_sort(shufsort_seq* seq,
                                                    shufsort_sort_stats* stats);
/* Top-down mergesort that ignores presortedness. */
SHUFSORT_API shufsort_status shufsort_baseline_sort(shufsort_seq* seq,
                                                    shufsort_sort_stats* stats);
/* Preprocess then adaptive sort. `report` may be NULL if not wanted. */
SHUFSORT_API shufsort_status shufsort_shuffled_sort(shufsort_seq* seq,
                                                    const shufsort_shuffle_config* cfg,
                                                    shufsort_shuffle_report** report,
                                                    shufsort_sort_stats* stats);

/* ------------------------------------------------------------------ */
/* Input generators (deterministic per seed).                           */
/* ------------------------------------------------------------------ */

SHUFSORT_API shufsort_status shufsort_gen_uniform(size_t n, uint64_t seed, shufsort_seq** out);
/* Permutation of {1..n} whose disorder is exactly `target` (0 <= target <= n-1). */
SHUFSORT_API shufsort_status shufsort_gen_target_disorder(size_t n, uint64_t target,
                                                          uint64_t seed, shufsort_seq** out);
/* Identity permutation perturbed by `swaps` random transpositions. */
SHUFSORT_API shufsort_status shufsort_gen_nearly_sorted(size_t n, uint64_t swaps,
                                                        uint64_t seed, shufsort_seq** out);

/* ------------------------------------------------------------------ */
/* Exact combinatorics. Values that can exceed 64 bits are returned as  */
/* decimal strings. `max_n` caps distribution-sized computations; pass  */
/* 0 for the default cap of 200.                                        */
/* ------------------------------------------------------------------ */

SHUFSORT_API shufsort_status shufsort_binomial_str(uint64_t n, int64_t k, char** out);

/* Number of n-element permutations with exactly k ascending runs ("0" outside [1, n]). */
SHUFSORT_API shufsort_status shufsort_eulerian_runs_str(uint64_t n, uint64_t k, char** out);

/* Number of n-element permutations with disorder exactly k ("0" outside [0, n-1]). */
SHUFSORT_API shufsort_status shufsort_descent_count_str(uint64_t n, int64_t k, char** out);

/* Full row of descent counts for length n, space separated. */
SHUFSORT_API shufsort_status shufsort_descent_distribution_str(uint32_t n, uint32_t max_n,
                                                               char** out);

/* Histogram of disorder over all n! permutations (n <= 9); `counts` holds n slots. */
SHUFSORT_API shufsort_status shufsort_exhaustive_descent_histogram(uint32_t n, uint64_t* counts);

/* P(disorder of a uniform random n-permutation < z), exact. Any of num/den/value
 * may be NULL. */
SHUFSORT_API shufsort_status shufsort_p_less(uint32_t n, uint64_t z, uint32_t max_n,
                                             char** num, char** den, double* value);

/* floor(n/2) + 1: every threshold strictly above it has p_less > 1/2. */
SHUFSORT_API uint64_t shufsort_majority_threshold(uint64_t n);

/* Verifies p_less(n, z) > 1/2 for every z in (majority_threshold(n), n-1] and
 * reports p_less(n, n-1). */
SHUFSORT_API shufsort_status shufsort_majority_check(uint32_t n, uint32_t max_n,
                                                     int* holds, double* p_at_top);

/* Exact binomial upper tail: P(X >= c) for X ~ Binomial(l, p_num/p_den). */
SHUFSORT_API shufsort_status shufsort_binomial_upper_tail(uint32_t l, uint32_t c,
                                                          uint64_t p_num, uint64_t p_den,
                                                          char** num, char** den,
                                                          double* value);

/* Whether (before+1)/(after+1) > 2^(1/m), decided in exact integer arithmetic;
 * `ratio` receives the real-valued quotient. */
SHUFSORT_API shufsort_status shufsort_improvement_condition(uint64_t disorder_before,
                                                            uint64_t disorder_after,
                                                            uint32_t budget_divisor,
                                                            int* holds, double* ratio);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SHUFSORT_H */
