#ifndef OSCULATE_H
#define OSCULATE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every call.
typedef enum OscStatus {
  OSC_STATUS_OK = 0,
  // A required pointer argument was NULL.
  OSC_STATUS_NULL_POINTER = 1,
  // An argument could not be parsed or is out of range.
  OSC_STATUS_INVALID_ARGUMENT = 2,
  // The start gaps are not allowed for the requested computation.
  OSC_STATUS_BAD_START = 3,
  // A verification ran and at least one identity failed.
  OSC_STATUS_VERIFICATION_FAILED = 4,
  // Internal error or caught panic.
  OSC_STATUS_INTERNAL = 5,
} OscStatus;

// Enumeration result. Opaque to C.
typedef struct OscTable OscTable;

// One row of an [`OscTable`]. `gap2` is 0 for two walkers and `anchor`
// is -1 unless the table was built with `positioned`.
typedef struct OscEntry {
  uint32_t n;
  uint32_t gap1;
  uint32_t gap2;
  uint32_t osc;
  int64_t anchor;
  // The count, saturated at `UINT64_MAX`; see `count_exact`.
  uint64_t count;
  // False when the count did not fit in 64 bits.
  bool count_exact;
} OscEntry;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Counts configurations of the walker system with the given start gaps
// (`start_len` 2 for three walkers, 1 for two) up to length `n_max`.
//
// `mode` is one of "non-crossing", "osculating", "vicious",
// "quasi-vicious". On success `*out` receives a table to be released
// with [`osc_table_free`].
//
// # Safety
// `mode` must be a NUL-terminated string, `start` must point to
// `start_len` values, and `out` must be writable.
enum OscStatus osc_enumerate(const char *mode,
                             const uint32_t *start,
                             size_t start_len,
                             uint32_t n_max,
                             bool positioned,
                             struct OscTable **out);

// Releases a table. NULL is ignored.
//
// # Safety
// `table` must come from [`osc_enumerate`] and not have been freed.
void osc_table_free(struct OscTable *table);

// Number of nonzero cells; 0 for NULL.
//
// # Safety
// `table` must be NULL or a live table.
size_t osc_table_len(const struct OscTable *table);

// Copies cell `index` (in row order: length, gaps, osculations) to `*entry`.
//
// # Safety
// `table` must be a live table and `entry` writable.
enum OscStatus osc_table_entry(const struct OscTable *table, size_t index, struct OscEntry *entry);

// Exact decimal count of cell `index`, or NULL if out of range.
//
// # Safety
// `table` must be NULL or a live table.
char *osc_table_count_string(const struct OscTable *table, size_t index);

// The table as CSV with a header row, or NULL for a NULL table.
//
// # Safety
// `table` must be NULL or a live table.
char *osc_table_to_csv(const struct OscTable *table);

// The table as JSON (counts as decimal strings), or NULL for a NULL table.
//
// # Safety
// `table` must be NULL or a live table.
char *osc_table_to_json(const struct OscTable *table);

// Evaluates a named series (as accepted by `osculate series`) through
// `t^order` and writes its JSON form to `*out`.
//
// # Safety
// `kind` must be a NUL-terminated string, `start` must point to
// `start_len` values (may be NULL when `start_len` is 0), `out` writable.
enum OscStatus osc_series_json(const char *kind,
                               const uint32_t *start,
                               size_t start_len,
                               size_t order,
                               char **out);

// Runs a named check (or "all") from start `(i, j)`. `order` 0 selects each
// check's default. `*report_json` receives `{"passed": ..., "reports": [...]}`
// whenever the checks ran, including when they failed.
//
// # Safety
// `check` must be a NUL-terminated string and `report_json` writable.
enum OscStatus osc_verify(const char *check,
                          uint32_t i,
                          uint32_t j,
                          size_t order,
                          char **report_json);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void osc_string_free(char *s);

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next call into this library on the same thread.
const char *osc_last_error_message(void);

// Library version as a static string.
const char *osc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OSCULATE_H */
