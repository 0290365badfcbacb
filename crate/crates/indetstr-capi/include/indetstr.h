/* C interface for the indetstr library. */

#ifndef INDETSTR_H
#define INDETSTR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum IndetstrStatus {
  IndetstrOk = 0,
  /**
   * A required pointer argument was null.
   */
  IndetstrNullArgument = 1,
  /**
   * A text argument was not valid UTF-8.
   */
  IndetstrInvalidUtf8 = 2,
  /**
   * The input text could not be parsed; see the last error message.
   */
  IndetstrParseError = 3,
  /**
   * Structurally invalid input (bad alphabet, malformed data, ...).
   */
  IndetstrInvalidInput = 4,
  /**
   * More distinct indeterminate letters than the alphabet allows.
   */
  IndetstrCapacityExceeded = 5,
  /**
   * The palindrome array violates a feasibility condition.
   */
  IndetstrInfeasible = 6,
  /**
   * An output buffer is too small; nothing was written.
   */
  IndetstrBufferTooSmall = 7,
  /**
   * An internal invariant failed; see the last error message.
   */
  IndetstrInternalError = 8,
} IndetstrStatus;

/**
 * Opaque alphabet handle.
 */
typedef struct IndetstrAlphabet IndetstrAlphabet;

/**
 * Opaque string handle.
 */
typedef struct IndetstrString IndetstrString;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread, or null.
 * Valid until the next failing call on the same thread.
 */
const char *indetstr_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *indetstr_version(void);

/**
 * Builds an alphabet from UTF-8 characters in rank order.
 * `code_width_bits` 0 means the 8-bit default; `sigma_star` `UINT32_MAX`
 * means the largest capacity the width allows.
 *
 * # Safety
 * `characters` must be a valid NUL-terminated string and `out` a valid
 * pointer.
 */
enum IndetstrStatus indetstr_alphabet_new(const char *characters,
                                          uint8_t code_width_bits,
                                          uint32_t sigma_star,
                                          struct IndetstrAlphabet **out);

/**
 * The `a,c,g,t` preset with half-byte codes.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum IndetstrStatus indetstr_alphabet_dna(struct IndetstrAlphabet **out);

/**
 * # Safety
 * `alphabet` must come from an `indetstr_alphabet_*` constructor and not
 * have been freed already; null is ignored.
 */
void indetstr_alphabet_free(struct IndetstrAlphabet *alphabet);

/**
 * Number of base characters, or 0 for null.
 */
uint32_t indetstr_alphabet_sigma(const struct IndetstrAlphabet *alphabet);

/**
 * Parses the text format (`a{a,c}b`, `*` for the don't-care).
 *
 * # Safety
 * `alphabet` must be a live alphabet handle, `text` a valid NUL-terminated
 * string, `out` a valid pointer.
 */
enum IndetstrStatus indetstr_string_parse(const struct IndetstrAlphabet *alphabet,
                                          const char *text,
                                          struct IndetstrString **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed; null is ignored.
 */
void indetstr_string_free(struct IndetstrString *s);

/**
 * Number of letters, or 0 for null.
 */
size_t indetstr_string_len(const struct IndetstrString *s);

/**
 * Maximum letter scope of the string, or 0 for null.
 */
uint32_t indetstr_string_scope(const struct IndetstrString *s);

/**
 * Renders the text format into a newly allocated string.
 *
 * # Safety
 * `s` must be a live string handle and `out` a valid pointer; release the
 * result with `indetstr_text_free`.
 */
enum IndetstrStatus indetstr_string_to_text(const struct IndetstrString *s, char **out);

/**
 * # Safety
 * `text` must come from this library and not have been freed; null is
 * ignored.
 */
void indetstr_text_free(char *text);

/**
 * Copies the integer codes (0 = don't-care, 1..sigma = regular, above
 * sigma = indeterminate-table entries) into `out`.
 *
 * # Safety
 * `s` must be a live handle and `out` point to at least `out_len` writable
 * `uint32_t`s.
 */
enum IndetstrStatus indetstr_string_codes(const struct IndetstrString *s,
                                          uint32_t *out,
                                          size_t out_len);

/**
 * Serializes to the binary file format into a newly allocated buffer.
 *
 * # Safety
 * `s` must be a live handle; `out` and `out_len` must be valid pointers;
 * release the buffer with `indetstr_bytes_free`.
 */
enum IndetstrStatus indetstr_string_to_bytes(const struct IndetstrString *s,
                                             uint8_t **out,
                                             size_t *out_len);

/**
 * # Safety
 * `(data, len)` must be exactly what `indetstr_string_to_bytes` returned.
 */
void indetstr_bytes_free(uint8_t *data, size_t len);

/**
 * Deserializes the binary file format.
 *
 * # Safety
 * `alphabet` must be a live handle, `data` readable for `len` bytes, and
 * `out` a valid pointer.
 */
enum IndetstrStatus indetstr_string_from_bytes(const struct IndetstrAlphabet *alphabet,
                                               const uint8_t *data,
                                               size_t len,
                                               struct IndetstrString **out);

/**
 * Decides regularity. `is_regular` always receives the verdict; when the
 * string is regular and `witness` is non-null it receives the lex-least
 * scope-1 string (`indetstr_string_len` values), and `sigma_prime`, when
 * non-null, the number of classes.
 *
 * # Safety
 * `s` must be a live handle and `is_regular` valid; `witness`, when
 * non-null, must point to at least `indetstr_string_len(s)` writable
 * `uint32_t`s.
 */
enum IndetstrStatus indetstr_regular_check(const struct IndetstrString *s,
                                           bool *is_regular,
                                           uint32_t *witness,
                                           uint32_t *sigma_prime);

/**
 * Writes the maximal palindrome array of the expanded string; the buffer
 * needs `2 * indetstr_string_len(s) + 1` entries.
 *
 * # Safety
 * `s` must be a live handle and `out` point to `out_len` writable
 * `uint32_t`s.
 */
enum IndetstrStatus indetstr_mp(const struct IndetstrString *s, uint32_t *out, size_t out_len);

/**
 * Checks the feasibility conditions of a palindrome array. Returns Ok,
 * Infeasible (the last error message names the violated condition), or an
 * argument error.
 *
 * # Safety
 * `values` must be readable for `len` entries.
 */
enum IndetstrStatus indetstr_mp_feasible(const uint32_t *values, size_t len);

/**
 * Reverse engineers a feasible palindrome array. On success `text_out`
 * receives the string in the integer text format (`#1#{2,3}#...#`),
 * `regular_out` whether a scope-1 realization exists (the output is then
 * the lex-least one), and `sigma_out` the number of characters used.
 *
 * # Safety
 * `values` must be readable for `len` entries; the three output pointers
 * must be valid; release `text_out` with `indetstr_text_free`.
 */
enum IndetstrStatus indetstr_construct(const uint32_t *values,
                                       size_t len,
                                       bool strict,
                                       char **text_out,
                                       bool *regular_out,
                                       uint32_t *sigma_out);

/**
 * Produces some string realizing a feasible palindrome array, in the
 * integer text format.
 *
 * # Safety
 * `values` must be readable for `len` entries and `text_out` valid;
 * release the text with `indetstr_text_free`.
 */
enum IndetstrStatus indetstr_any_string(const uint32_t *values, size_t len, char **text_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INDETSTR_H */
