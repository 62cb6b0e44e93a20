// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#ifndef HUYGENS_H_
#define HUYGENS_H_

#include <stddef.h>

#if defined(HUYGENS_BUILD)
#define HY_API __attribute__((visibility("default")))
#else
#define HY_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

// Return codes double as CLI exit codes.
typedef enum {
  HY_OK = 0,
  HY_VERIFY_FAILED = 1,
  HY_INPUT_ERROR = 2,
  HY_RESOURCE_LIMIT = 3,
  HY_INTERNAL_ERROR = 4
} hy_status;

typedef struct hy_context hy_context;
typedef struct hy_report hy_report;

enum {
  HY_REPORT_TIMINGS = 1,
  HY_REPORT_WITNESS = 2
};

HY_API const char* hy_version(void);

HY_API hy_context* hy_context_new(void);
HY_API void hy_context_free(hy_context* ctx);
// JSON config: caps, threads, ranking, precision ladder, data_dir, report.
HY_API hy_status hy_context_load_config(hy_context* ctx, const char* path);
HY_API hy_status hy_context_set_threads(hy_context* ctx, unsigned threads);
// Report path from the config, or NULL.
HY_API const char* hy_context_report_path(const hy_context* ctx);
// Message of the last failing call on ctx; never NULL.
HY_API const char* hy_last_error(const hy_context* ctx);

// Parses a .rel, .script or .poly file. *out gets a short summary or the
// lint diagnostics; release with hy_string_free.
HY_API hy_status hy_check_file(hy_context* ctx, const char* path, char** out);

typedef void (*hy_step_callback)(const char* id, const char* status, const char* mode, double millis,
                                 void* user);

// steps: comma-separated ids, or NULL for all.
HY_API hy_status hy_replay(hy_context* ctx, const char* script_path, const char* steps, hy_step_callback cb,
                           void* user, hy_report** out);
HY_API int hy_report_passed(const hy_report* rep);
HY_API size_t hy_report_step_count(const hy_report* rep);
HY_API const char* hy_report_step_id(const hy_report* rep, size_t i);
HY_API const char* hy_report_step_status(const hy_report* rep, size_t i);
HY_API const char* hy_report_step_mode(const hy_report* rep, size_t i);
HY_API const char* hy_report_step_digest(const hy_report* rep, size_t i);
HY_API const char* hy_report_step_witness(const hy_report* rep, size_t i);
HY_API size_t hy_report_step_note_count(const hy_report* rep, size_t i);
HY_API const char* hy_report_step_note(const hy_report* rep, size_t i, size_t k);
// flags: HY_REPORT_*. Release with hy_string_free.
HY_API char* hy_report_json(const hy_report* rep, int flags);
HY_API void hy_report_free(hy_report* rep);

// order: "lex" or "grevlex"; saturate may be NULL. *out: one generator per line.
HY_API hy_status hy_groebner(hy_context* ctx, const char* poly_path, const char* order, const char* saturate,
                             char** out);
// Normal form of expr modulo the reduced grevlex basis of the system in by_path.
HY_API hy_status hy_reduce(hy_context* ctx, const char* expr, const char* by_path, char** out);

HY_API void hy_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif  // HUYGENS_H_
