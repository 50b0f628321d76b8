#ifndef THOMPSON_STRANDS_H
#define THOMPSON_STRANDS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum TsStatus {
  TS_STATUS_OK = 0,
  TS_STATUS_NULL_ARGUMENT = 1,
  TS_STATUS_INVALID_UTF8 = 2,
  TS_STATUS_PARSE_ERROR = 3,
  TS_STATUS_DOMAIN_ERROR = 4,
  TS_STATUS_PANIC = 5,
} TsStatus;

// A point of CF.
typedef struct TsConfiguration TsConfiguration;

// A strand diagram.
typedef struct TsDiagram TsDiagram;

// A generalized strand diagram.
typedef struct TsGeneralized TsGeneralized;

// Description of the last failure on this thread; empty after a success.
const char *ts_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library.
void ts_string_free(char *s);

// Parses the `diagram <m>` / `S i` / `M i` text format.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum TsStatus ts_diagram_parse(const char *text, struct TsDiagram **out);

// The reduced `(1, 1)` diagram of a word in `a`, `A`, `b`, `B`.
//
// # Safety
// `word` must be a NUL-terminated string and `out` a valid pointer.
enum TsStatus ts_diagram_from_word(const char *word, struct TsDiagram **out);

// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum TsStatus ts_diagram_reduce(const struct TsDiagram *d, struct TsDiagram **out);

// Stacks `a` on top of `b` and reduces.
//
// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum TsStatus ts_diagram_multiply(const struct TsDiagram *a,
                                  const struct TsDiagram *b,
                                  struct TsDiagram **out);

// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum TsStatus ts_diagram_invert(const struct TsDiagram *d, struct TsDiagram **out);

// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum TsStatus ts_diagram_equivalent(const struct TsDiagram *a,
                                    const struct TsDiagram *b,
                                    bool *out);

// # Safety
// `d` must be a live handle; `sources` and `sinks` valid pointers.
enum TsStatus ts_diagram_shape(const struct TsDiagram *d, size_t *sources, size_t *sinks);

// The diagram in the text format it is parsed from.
//
// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum TsStatus ts_diagram_to_string(const struct TsDiagram *d, char **out);

// The canonical encoding of the reduced diagram, e.g. `(1,2):S1`.
//
// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum TsStatus ts_diagram_encoding(const struct TsDiagram *d, char **out);

// # Safety
// `d` must be null or a handle not yet freed.
void ts_diagram_free(struct TsDiagram *d);

// Whitespace-separated rationals (`p/q` or decimals) forming a CF tuple.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum TsStatus ts_configuration_parse(const char *text, struct TsConfiguration **out);

// Whether a tuple lies in CF. An unparsable or empty tuple is an error.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum TsStatus ts_tuple_in_cf(const char *text, bool *out);

// Whether a tuple lies in DF.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum TsStatus ts_tuple_in_df(const char *text, bool *out);

// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum TsStatus ts_configuration_retract(const struct TsConfiguration *c,
                                       struct TsConfiguration **out);

// Duplicates collapsed.
//
// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum TsStatus ts_configuration_canonicalize(const struct TsConfiguration *c,
                                            struct TsConfiguration **out);

// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum TsStatus ts_configuration_len(const struct TsConfiguration *c, size_t *out);

// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum TsStatus ts_configuration_to_string(const struct TsConfiguration *c, char **out);

// # Safety
// `c` must be null or a handle not yet freed.
void ts_configuration_free(struct TsConfiguration *c);

// A diagram block followed by a `forest <l>` block.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum TsStatus ts_generalized_parse(const char *text, struct TsGeneralized **out);

// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum TsStatus ts_generalized_config_map(const struct TsGeneralized *g,
                                        struct TsConfiguration **out);

// # Safety
// `g` must be null or a handle not yet freed.
void ts_generalized_free(struct TsGeneralized *g);

#endif  /* THOMPSON_STRANDS_H */
