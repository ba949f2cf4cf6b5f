/* C API for the simrouge text-similarity engine. */

#ifndef SIMROUGE_H
#define SIMROUGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of an API call.
 */
typedef enum SimrougeStatus {
  /**
   * Success.
   */
  SimrougeStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  SimrougeStatus_NullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  SimrougeStatus_InvalidUtf8 = 2,
  /**
   * Unknown method/setting name or invalid combination.
   */
  SimrougeStatus_InvalidConfig = 3,
  /**
   * The method needs a WordNet database and none was supplied.
   */
  SimrougeStatus_MissingLexicon = 4,
  /**
   * File system or database parse failure.
   */
  SimrougeStatus_IoError = 5,
} SimrougeStatus;

/**
 * Opaque handle to a loaded WordNet database.
 */
typedef struct SimrougeWordnet SimrougeWordnet;

/**
 * Recall / precision / F-measure triple, each in [0, 1].
 */
typedef struct SimrougeScore {
  double recall;
  double precision;
  double f;
} SimrougeScore;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *simrouge_version(void);

/**
 * Message describing the current thread's most recent failure, or null.
 * The pointer stays valid until the next failing call on this thread.
 */
const char *simrouge_last_error_message(void);

/**
 * Load a WordNet database from a directory containing the standard
 * `data.*` / `index.*` / `*.exc` files. On success writes a handle to
 * `out_db`; free it with [`simrouge_wordnet_free`].
 *
 * # Safety
 * `dir` must be a valid NUL-terminated string and `out_db` a valid
 * pointer.
 */
enum SimrougeStatus simrouge_wordnet_load(const char *dir, struct SimrougeWordnet **out_db);

/**
 * Free a database handle. Null is a no-op.
 *
 * # Safety
 * `db` must be null or a pointer returned by [`simrouge_wordnet_load`]
 * that has not been freed yet.
 */
void simrouge_wordnet_free(struct SimrougeWordnet *db);

/**
 * Number of synsets in a loaded database (0 for null).
 *
 * # Safety
 * `db` must be null or a live handle from [`simrouge_wordnet_load`].
 */
size_t simrouge_wordnet_synset_count(const struct SimrougeWordnet *db);

/**
 * Score a candidate sentence against a reference sentence.
 *
 * `method` is one of unigram, bigram, trigram, 4-gram, lcs, skip-bigram,
 * unigram-pos, synonyms, relationship; `preprocess` is none, sw, sm or
 * sw+sm. `skip_distance` applies to skip-bigram. When `pretagged` is true
 * the input tokens carry `surface_POS` tags. `db` may be null for methods
 * that do not consult WordNet. The score lands in `out_score`;
 * `out_flagged` (nullable) receives whether F exceeds `threshold`.
 *
 * # Safety
 * String arguments must be valid NUL-terminated strings; `out_score` must
 * be a valid pointer; `db` must be null or a live handle.
 */
enum SimrougeStatus simrouge_score_pair(const char *method,
                                        const char *preprocess,
                                        double threshold,
                                        size_t skip_distance,
                                        bool pretagged,
                                        const struct SimrougeWordnet *db,
                                        const char *ref_text,
                                        const char *cand_text,
                                        struct SimrougeScore *out_score,
                                        bool *out_flagged);

/**
 * Cohen's kappa between two equal-length boolean annotation arrays.
 *
 * # Safety
 * `a` and `b` must point to `len` readable booleans; `out_kappa` must be
 * a valid pointer.
 */
enum SimrougeStatus simrouge_cohen_kappa(const bool *a,
                                         const bool *b,
                                         size_t len,
                                         double *out_kappa);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIMROUGE_H */
