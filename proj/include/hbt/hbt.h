#ifndef HBT_HBT_H
#define HBT_HBT_H

/* C interface to the handlebody tightness library.
 *
 * Every call returns an hbt_status. On failure the thread-local message from
 * hbt_last_error() describes it. Strings handed out by the library are
 * NUL-terminated, owned by the caller and released with hbt_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HBT_API __declspec(dllexport)
#else
#define HBT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hbt_status {
  HBT_OK = 0,
  HBT_ERR_CROSSING_CHORDS,
  HBT_ERR_NOT_INVOLUTION,
  HBT_ERR_ARC_NOT_IN_DIAGRAM,
  HBT_ERR_DISALLOWED_CLOSED_COMPONENT,
  HBT_ERR_DEGREE_VIOLATION,
  HBT_ERR_BAD_IDENTIFICATION,
  HBT_ERR_EMPTY_INTERSECTION,
  HBT_ERR_UNTIGHT_BOUNDARY,
  HBT_ERR_BAD_CERTIFICATE,
  HBT_ERR_RESOURCE_LIMIT,
  HBT_ERR_BAD_SLOPE,
  HBT_ERR_SYNTAX,
  HBT_ERR_SEMANTIC,
  HBT_ERR_INVALID_ARGUMENT,
  HBT_ERR_INTERNAL
} hbt_status;

typedef struct hbt_presentation hbt_presentation;
typedef struct hbt_report hbt_report;

typedef struct hbt_options {
  uint64_t config_limit; /* 0 selects the default of 1000000 */
  unsigned workers;      /* 0 or 1: single-threaded */
} hbt_options;

HBT_API const char* hbt_version(void);
HBT_API const char* hbt_last_error(void);
/* For HBT_ERR_SEMANTIC: the underlying validation failure. */
HBT_API hbt_status hbt_last_error_cause(void);
HBT_API const char* hbt_status_name(hbt_status status);
HBT_API void hbt_string_free(char* s);

/* Parses and validates a presentation document. */
HBT_API hbt_status hbt_presentation_parse(const char* text, hbt_presentation** out);
HBT_API void hbt_presentation_free(hbt_presentation* p);
HBT_API hbt_status hbt_presentation_serialize(const hbt_presentation* p, char** out);
HBT_API hbt_status hbt_presentation_digest(const hbt_presentation* p, char** out);
HBT_API int hbt_presentation_genus(const hbt_presentation* p);
HBT_API int hbt_presentation_has_config(const hbt_presentation* p);
/* "valid" plus any warnings, one per line. */
HBT_API hbt_status hbt_validate(const hbt_presentation* p, char** out);

HBT_API hbt_status hbt_classify(const hbt_presentation* p, const hbt_options* opts, hbt_report** out);
HBT_API void hbt_report_free(hbt_report* r);
HBT_API uint64_t hbt_report_configurations(const hbt_report* r);
HBT_API int hbt_report_potentially_allowable(const hbt_report* r);
HBT_API int hbt_report_transitions(const hbt_report* r);
HBT_API int hbt_report_components(const hbt_report* r);
HBT_API int hbt_report_tight(const hbt_report* r);
HBT_API int hbt_report_component_size(const hbt_report* r, int component);
HBT_API int hbt_report_component_allowable(const hbt_report* r, int component);
HBT_API hbt_status hbt_report_text(const hbt_report* r, char** out);
HBT_API hbt_status hbt_report_dot(const hbt_report* r, char** out);

/* Decides the configuration stored in the document. *tight is 1 or 0;
 * `text` (optional) receives the verdict with its witness path. */
HBT_API hbt_status hbt_check(const hbt_presentation* p, const hbt_options* opts, int* tight, char** text);

HBT_API hbt_status hbt_enumerate_text(int n, char** out);

/* Slope -p/q given as "-p/q" or "-p". */
HBT_API hbt_status hbt_oracle_solid_torus(const char* slope, uint64_t* count, char** cf_text);
HBT_API hbt_status hbt_solid_torus_template(const char* slope, int with_faces, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HBT_HBT_H */
