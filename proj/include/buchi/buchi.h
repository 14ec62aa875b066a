/* C interface to libbuchi.
 *
 * Handles are opaque. Every call returns a buchi_status; on failure the
 * message is available from buchi_last_error() on the same thread until the
 * next call. Strings returned through char** are owned by the caller and
 * released with buchi_string_free. */
#ifndef BUCHI_BUCHI_H
#define BUCHI_BUCHI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BUCHI_BUILDING_LIBRARY)
#    define BUCHI_API __declspec(dllexport)
#  else
#    define BUCHI_API __declspec(dllimport)
#  endif
#else
#  define BUCHI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum buchi_status {
  BUCHI_OK = 0,
  BUCHI_ERR_INVALID_ARGUMENT = 1,
  BUCHI_ERR_PARSE = 2,
  BUCHI_ERR_NOT_SENTENCE = 3,
  BUCHI_ERR_CAPACITY = 4,
  BUCHI_ERR_NOT_LINEAR_ORDER = 5,
  BUCHI_ERR_IO = 6,
  BUCHI_ERR_INTERNAL = 7
} buchi_status;

typedef struct buchi_formula buchi_formula;
typedef struct buchi_dfa buchi_dfa;

typedef struct buchi_config {
  unsigned base;             /* >= 2 */
  uint64_t state_cap;        /* >= 1 */
  int minimize_each_step;    /* nonzero to minimize after every operation */
} buchi_config;

BUCHI_API void buchi_config_init(buchi_config* cfg);
BUCHI_API const char* buchi_version(void);

BUCHI_API const char* buchi_last_error(void);
/* Character offset of the last parse error, or -1. */
BUCHI_API long buchi_last_error_position(void);
BUCHI_API void buchi_string_free(char* s);

/* Formulas */
BUCHI_API buchi_status buchi_formula_parse(const char* text, buchi_formula** out);
BUCHI_API void buchi_formula_free(buchi_formula* f);
BUCHI_API buchi_status buchi_formula_render(const buchi_formula* f, char** out);
/* JSON array of names in first-occurrence order. */
BUCHI_API buchi_status buchi_formula_free_vars(const buchi_formula* f, char** out_json);
BUCHI_API buchi_status buchi_formula_normalize(const buchi_formula* f, buchi_formula** out);
/* The k-th lexicographic valuation order, free variables a and b. */
BUCHI_API buchi_status buchi_order_formula(unsigned k, buchi_formula** out);

/* Automata */
BUCHI_API buchi_status buchi_compile(const buchi_formula* f, const buchi_config* cfg, buchi_dfa** out);
BUCHI_API void buchi_dfa_free(buchi_dfa* d);
BUCHI_API size_t buchi_dfa_state_count(const buchi_dfa* d);
BUCHI_API buchi_status buchi_dfa_to_json(const buchi_dfa* d, char** out);
BUCHI_API buchi_status buchi_dfa_to_dot(const buchi_dfa* d, char** out);
BUCHI_API buchi_status buchi_dfa_from_json(const char* json, buchi_dfa** out);
/* values: decimal strings, one per track in track order. */
BUCHI_API buchi_status buchi_dfa_accepts(const buchi_dfa* d, const char* const* values, size_t count, int* out);
BUCHI_API buchi_status buchi_dfa_equivalent(const buchi_dfa* a, const buchi_dfa* b, int* out);

/* Queries */
BUCHI_API buchi_status buchi_decide(const buchi_formula* sentence, const buchi_config* cfg, int* out);
/* {"vars":[...],"solutions":[["8"],["16"]]} in canonical order. */
BUCHI_API buchi_status buchi_solve(const buchi_formula* f, const buchi_config* cfg, size_t limit, char** out_json);
/* Solutions with every coordinate below bound; both decimal strings. */
BUCHI_API buchi_status buchi_count(const buchi_formula* f, const buchi_config* cfg, const char* bound, char** out);

/* Orders. domain may be NULL for all naturals. Result JSON:
 * {"outcome":"FiniteRank","value":2,"cap":6,"steps":[...]} */
BUCHI_API buchi_status buchi_rank(const buchi_formula* relation, const buchi_formula* domain,
                                  const buchi_config* cfg, uint64_t rank_cap, char** out_json);
/* {"reflexivity":true,...} with the sentences. */
BUCHI_API buchi_status buchi_check_linear_order(const buchi_formula* relation, const buchi_formula* domain,
                                                const buchi_config* cfg, int* out, char** out_json);
BUCHI_API buchi_status buchi_compare_direct(unsigned k, const char* x, const char* y, unsigned base, int* out);

/* Countermodel. mutated selects the broken V_2 used as a negative control. */
BUCHI_API buchi_status buchi_cm_check(uint64_t samples, uint64_t seed, int mutated, int* all_passed,
                                      char** out_json, char** out_table);
/* p is "a/b" or "a", positive. */
BUCHI_API buchi_status buchi_cm_witness(const char* p, int* checks_passed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
