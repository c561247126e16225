/* hh2 -- second Hochschild cohomology of quiver algebras with relations.
 *
 * C interface to the engine: parse a presentation (or pick a family from the
 * built-in catalogue), run the pipeline, and read the results back through an
 * opaque report handle. All returned strings are UTF-8; strings returned as
 * `char**` are owned by the caller and released with hh2_string_free, strings
 * returned as `const char*` live as long as the report handle.
 */
#ifndef HH2_H
#define HH2_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hh2_report hh2_report;

typedef enum hh2_status {
  HH2_OK = 0,
  HH2_ERR_PARSE = 1,          /* malformed presentation text */
  HH2_ERR_INVALID = 2,        /* invalid input (bad family spec, bad options, ...) */
  HH2_ERR_NOT_ADMISSIBLE = 3, /* no nilpotency bound within the cap */
  HH2_ERR_LIMIT = 4,          /* a configured size limit was exceeded */
  HH2_ERR_CONSISTENCY = 5,    /* internal cross-checks failed */
  HH2_ERR_INTERNAL = 6
} hh2_status;

typedef struct hh2_options {
  int field_char;      /* -1: keep the input's field; otherwise 0 or a prime */
  int cap;             /* nilpotency search cap; <= 0 means the default (64) */
  int run_oracle;      /* cross-check against the reduced bar complex */
  int vanishing_only;  /* stop after the quotient + vanishing criterion */
  int emit_resolution; /* include f2/f3 data in the JSON report */
} hh2_options;

void hh2_options_init(hh2_options* opt);

/* Pipeline entry points. On success *out receives a report handle. */
hh2_status hh2_compute_text(const char* dsl_text, const hh2_options* opt, hh2_report** out);
hh2_status hh2_compute_file(const char* path, const hh2_options* opt, hh2_report** out);
hh2_status hh2_compute_family(const char* family_spec, const hh2_options* opt, hh2_report** out);

/* Family grid regression. `filter` (nullable) selects by substring.
 * *all_pass receives 1/0; *table_text (nullable) receives the rendered table. */
hh2_status hh2_verify_families(const char* filter, int* all_pass, char** table_text);

/* Report accessors. hh2_report_hh(r, n) for n = 0,1,2; -1 when not computed. */
int hh2_report_dim(const hh2_report* r);
int hh2_report_hh(const hh2_report* r, int n);
int hh2_report_vanishing_applicable(const hh2_report* r); /* 1/0, -1 unknown */
int hh2_report_exactness_ok(const hh2_report* r);         /* 1/0, -1 unknown */
/* Suggested process exit code: 0 ok, 3 internal consistency failure. */
int hh2_report_exit_code(const hh2_report* r);
const char* hh2_report_text(const hh2_report* r);
const char* hh2_report_json(const hh2_report* r);
void hh2_report_free(hh2_report* r);

/* Message for the most recent failing call on this thread. */
const char* hh2_last_error(void);
void hh2_string_free(char* s);
const char* hh2_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HH2_H */
