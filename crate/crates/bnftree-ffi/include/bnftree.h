#ifndef BNFTREE_H
#define BNFTREE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a call across the boundary.
 */
typedef enum {
  BNFTREE_STATUS_OK = 0,
  /**
   * The decision procedure answered "no"; not an error.
   */
  BNFTREE_STATUS_UNSATISFIABLE = 1,
  BNFTREE_STATUS_PARSE_ERROR = 2,
  BNFTREE_STATUS_INVALID_INPUT = 3,
  BNFTREE_STATUS_NULL_POINTER = 4,
} BnftreeStatus;

/**
 * An owned automaton behind an opaque pointer.
 */
typedef struct BnftreeAutomaton BnftreeAutomaton;

/**
 * An owned clause set behind an opaque pointer.
 */
typedef struct BnftreeClauseSet BnftreeClauseSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bnftree_last_error(void);

/**
 * Crate version as a static string.
 */
const char *bnftree_version(void);

/**
 * Frees a string returned by one of the `*_print` functions.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void bnftree_string_free(char *s);

/**
 * Parses a clause document into a new handle.
 *
 * # Safety
 * `src` must be a valid NUL-terminated string and `out` a valid pointer.
 */
BnftreeStatus bnftree_clause_set_parse(const char *src, BnftreeClauseSet **out);

/**
 * Prints a clause set; the caller owns the returned string.
 *
 * # Safety
 * `cs` must be a live handle from this library.
 */
char *bnftree_clause_set_print(const BnftreeClauseSet *cs);

/**
 * Releases a clause-set handle.
 *
 * # Safety
 * `cs` must be a live handle from this library or null.
 */
void bnftree_clause_set_free(BnftreeClauseSet *cs);

/**
 * Decides satisfiability of a clause set; writes the verdict to `out`.
 *
 * # Safety
 * `cs` must be a live handle and `out` a valid pointer.
 */
BnftreeStatus bnftree_clause_set_is_satisfiable(const BnftreeClauseSet *cs, bool *out);

/**
 * Builds the automaton of a satisfiable clause set. Returns
 * `Unsatisfiable` (with `out` null) when the reduced tableau has no state
 * satisfying the initial clauses.
 *
 * # Safety
 * `cs` must be a live handle and `out` a valid pointer.
 */
BnftreeStatus bnftree_clause_set_to_automaton(const BnftreeClauseSet *cs, BnftreeAutomaton **out);

/**
 * Parses an automaton document into a new handle.
 *
 * # Safety
 * `src` must be a valid NUL-terminated string and `out` a valid pointer.
 */
BnftreeStatus bnftree_automaton_parse(const char *src, BnftreeAutomaton **out);

/**
 * Prints an automaton; the caller owns the returned string.
 *
 * # Safety
 * `a` must be a live handle from this library.
 */
char *bnftree_automaton_print(const BnftreeAutomaton *a);

/**
 * Releases an automaton handle.
 *
 * # Safety
 * `a` must be a live handle from this library or null.
 */
void bnftree_automaton_free(BnftreeAutomaton *a);

/**
 * Decides language emptiness; writes the verdict to `out`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
BnftreeStatus bnftree_automaton_is_empty(const BnftreeAutomaton *a, bool *out);

/**
 * Translates an automaton into its characteristic clause set. `mode` 0
 * assigns indices per distinct successor, 1 per tuple position.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
BnftreeStatus bnftree_automaton_to_clause_set(const BnftreeAutomaton *a,
                                              int mode,
                                              BnftreeClauseSet **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BNFTREE_H */
