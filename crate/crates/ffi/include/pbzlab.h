/* pbzlab C API. Handles are opaque; strings from the library are freed with pbz_string_free. */

#ifndef PBZLAB_H
#define PBZLAB_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define PBZ_OK 0

/**
 * Invalid argument (null pointer, bad UTF-8, unknown flavor).
 */
#define PBZ_EINVAL -1

/**
 * Construction or validation failure; see pbz_last_error.
 */
#define PBZ_EALGEBRA -2

/**
 * Parse error in a term, identity or JSON document.
 */
#define PBZ_EPARSE -3

/**
 * An opaque algebra handle.
 */
typedef struct PbzAlgebra PbzAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message for this thread, or null. Owned by the library; do
 * not free.
 */
const char *pbz_last_error(void);

/**
 * Builds a catalog algebra (e.g. "D:4", "MO:2", "GD:2", "SANDWICH:M3").
 * Returns null on failure.
 */
struct PbzAlgebra *pbz_catalog(const char *name);

/**
 * Loads an algebra from a JSON document (the pbzlab file format).
 * Returns null on failure.
 */
struct PbzAlgebra *pbz_from_json(const char *json);

/**
 * Releases an algebra handle. Null is ignored.
 */
void pbz_free(struct PbzAlgebra *a);

/**
 * Element count, or PBZ_EINVAL for a null handle.
 */
int32_t pbz_n(const struct PbzAlgebra *a);

/**
 * Flavor code: 0 lattice, 1 BI, 2 BZ; PBZ_EINVAL for null.
 */
int32_t pbz_flavor(const struct PbzAlgebra *a);

/**
 * Classification as a JSON object; release with pbz_string_free. Null on
 * failure.
 */
char *pbz_classify_json(const struct PbzAlgebra *a);

/**
 * Tests an identity (pbzlab syntax, e.g. "x ^ y = y ^ x"). Writes 1 into
 * *holds if it is satisfied, 0 otherwise. Returns PBZ_OK or an error code.
 */
int32_t pbz_satisfies(const struct PbzAlgebra *a, const char *identity, int32_t *holds);

/**
 * Number of congruences at the given flavor (0 lattice, 1 BI, 2 BZ), or a
 * negative error code.
 */
int32_t pbz_congruence_count(const struct PbzAlgebra *a, int32_t flavor);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void pbz_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PBZLAB_H */
