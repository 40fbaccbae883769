#ifndef D21_H
#define D21_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum D21Status {
  D21_STATUS_OK = 0,
  D21_STATUS_NULL_POINTER = 1,
  D21_STATUS_INVALID_UTF8 = 2,
  D21_STATUS_SYNTAX = 3,
  D21_STATUS_SEMANTIC = 4,
  D21_STATUS_DIVISION_BY_ZERO = 5,
  D21_STATUS_POLE = 6,
  D21_STATUS_MIXED_PARITY = 7,
  D21_STATUS_BLOCK_VIOLATION = 8,
  D21_STATUS_UNKNOWN_NAME = 9,
  D21_STATUS_IO = 10,
  D21_STATUS_JSON = 11,
  D21_STATUS_INTERNAL = 12,
  D21_STATUS_PANIC = 13,
} D21Status;

/**
 * A 1-cochain of the embedding with its block.
 */
typedef struct D21Cochain D21Cochain;

/**
 * A symbol in `P(4)` (possibly carrying `beta`, `h`).
 */
typedef struct D21Symbol D21Symbol;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; valid until the next
 * failing call on the same thread.
 */
const char *d21_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void d21_string_free(char *s);

/**
 * # Safety
 * `src` must be a NUL-terminated string and `out` writable.
 */
enum D21Status d21_symbol_parse(const char *src, struct D21Symbol **out);

/**
 * # Safety
 * `s` must be null or a handle from this library, not yet freed.
 */
void d21_symbol_free(struct D21Symbol *s);

/**
 * Canonical text of a symbol; free with `d21_string_free`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum D21Status d21_symbol_to_string(const struct D21Symbol *s, char **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum D21Status d21_symbol_poisson(const struct D21Symbol *a,
                                  const struct D21Symbol *b,
                                  struct D21Symbol **out);

/**
 * The `h`-bracket `(A o B - (-1)^{|A||B|} B o A) / h`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum D21Status d21_symbol_h_bracket(const struct D21Symbol *a,
                                    const struct D21Symbol *b,
                                    struct D21Symbol **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum D21Status d21_symbol_equal(const struct D21Symbol *a, const struct D21Symbol *b, bool *out);

/**
 * One of `theta1`, `theta2`, `theta`, `rho2`, `thetabar1`, `rho2h`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum D21Status d21_cochain_named(const char *name, struct D21Cochain **out);

/**
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum D21Status d21_cochain_from_json(const char *json, struct D21Cochain **out);

/**
 * # Safety
 * `c` must be a live handle and `out` writable.
 */
enum D21Status d21_cochain_to_json(const struct D21Cochain *c, char **out);

/**
 * # Safety
 * `c` must be null or a handle from this library, not yet freed.
 */
void d21_cochain_free(struct D21Cochain *c);

/**
 * Whether `d1(c) = 0` in the cochain's complex.
 *
 * # Safety
 * `c` must be a live handle and `out` writable.
 */
enum D21Status d21_cochain_is_cocycle(const struct D21Cochain *c, bool *out);

/**
 * Dimension of the first cohomology of block `(k, n)` with values in
 * `target` (`"P"`, `"P+"`, `"K4"`, `"K4'"`); `h_depth > 0` selects the
 * quantized complex.
 *
 * # Safety
 * `target` must be a NUL-terminated string and `out` writable.
 */
enum D21Status d21_h1_dim(int32_t k, int32_t n, const char *target, uint32_t h_depth, size_t *out);

/**
 * Verify one of the deformations `cor42`, `thm43`, `thm45`.
 *
 * # Safety
 * `which` must be a NUL-terminated string and `passed` writable.
 */
enum D21Status d21_deform_verify(const char *which, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* D21_H */
