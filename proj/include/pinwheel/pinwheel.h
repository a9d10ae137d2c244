/* C API for the pinwheel scheduling library.
 *
 * Opaque handles, integer status codes, UTF-8 strings. Every object returned
 * through an out-parameter is owned by the caller and must be released with
 * the matching _free function. Strings returned by accessor functions stay
 * valid until their owning handle is freed. On any non-PW_OK status,
 * pw_last_error() describes the failure (thread-local).
 */
#ifndef PINWHEEL_H
#define PINWHEEL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PW_API __declspec(dllexport)
#else
#define PW_API __attribute__((visibility("default")))
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_ERR_PARSE = 1,        /* malformed text input */
  PW_ERR_DOMAIN = 2,       /* operation precondition violated */
  PW_ERR_OUT_OF_SCOPE = 3, /* instance outside what the constructions cover */
  PW_ERR_STATE_CAP = 4,    /* search state-space estimate above the cap */
  PW_ERR_BAD_ARG = 5,      /* null handle / invalid argument */
  PW_ERR_INTERNAL = 6,     /* library invariant broken (always a bug) */
} pw_status;

/* Verdict a finished report carries; mirrors the CLI exit-code convention. */
typedef enum pw_verdict {
  PW_VERDICT_OK = 0,           /* valid / schedulable / covered / computed */
  PW_VERDICT_NEGATIVE = 1,     /* invalid / unschedulable / not covered */
  PW_VERDICT_INCONCLUSIVE = 2, /* search budget exhausted */
} pw_verdict;

typedef struct pw_instance pw_instance;
typedef struct pw_schedule pw_schedule;
typedef struct pw_report pw_report;

PW_API const char* pw_version(void);
PW_API const char* pw_last_error(void);

/* --- handles ------------------------------------------------------------ */

/* Comma-separated periods: "p/q", integer, or decimal (<= 9 fraction digits);
 * whitespace ignored; every period must be >= 1. */
PW_API pw_status pw_instance_parse(const char* text, pw_instance** out);
PW_API void pw_instance_free(pw_instance* a);
PW_API const char* pw_instance_text(const pw_instance* a); /* canonical form */
PW_API int pw_instance_task_count(const pw_instance* a);

/* Comma-separated 1-based task indices, or one digit per slot if no comma. */
PW_API pw_status pw_schedule_parse(const char* text, pw_schedule** out);
PW_API void pw_schedule_free(pw_schedule* s);
PW_API const char* pw_schedule_text(const pw_schedule* s); /* canonical form */
PW_API int pw_schedule_period(const pw_schedule* s);

/* --- operations ----------------------------------------------------------*/
/* Each produces a report on success. A report renders the outcome both as
 * human-readable text and as a JSON document with identical content. */

PW_API pw_status pw_density(const pw_instance* a, pw_report** out);
PW_API pw_status pw_verify(const pw_schedule* s, const pw_instance* a,
                           pw_report** out);
PW_API pw_status pw_build_schedule(const pw_instance* a, pw_report** out);
PW_API pw_status pw_classify(const char* a1, const char* a2, pw_report** out);
/* drop: comma-separated region names ("M2,M5") to leave out, or NULL. */
PW_API pw_status pw_cover_check(const char* drop, pw_report** out);
PW_API pw_status pw_find_schedule(const pw_instance* a, int max_period,
                                  pw_report** out);
PW_API pw_status pw_prove_unschedulable(const pw_instance* a,
                                        long long state_cap, pw_report** out);
PW_API pw_status pw_regions_dump(pw_report** out);

/* --- reports ------------------------------------------------------------ */

PW_API void pw_report_free(pw_report* r);
PW_API pw_verdict pw_report_verdict(const pw_report* r);
PW_API const char* pw_report_text(const pw_report* r);
PW_API const char* pw_report_json(const pw_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PINWHEEL_H */
