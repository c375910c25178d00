/* hawk — proof kernel and proof compiler for higher-type arithmetic.
 *
 * C interface over the shared library. All objects are opaque handles owned
 * by the caller through the matching _free function. Calls returning
 * hawk_status use HAWK_OK for API-level success; semantic verdicts (a proof
 * being rejected, a corpus item failing) live inside the report, so a
 * rejected proof still returns HAWK_OK with hawk_report_ok(report) == 0.
 * On any non-OK status, hawk_ctx_last_error(ctx) carries a message.
 */
#ifndef HAWK_H
#define HAWK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hawk_status {
  HAWK_OK = 0,
  HAWK_ERR_PARSE = 1,    /* input text failed to parse */
  HAWK_ERR_USAGE = 2,    /* bad arguments (null handles, unreadable file) */
  HAWK_ERR_INTERNAL = 3  /* defect, e.g. rewrite step budget exceeded */
} hawk_status;

typedef struct hawk_ctx hawk_ctx;
typedef struct hawk_source hawk_source;
typedef struct hawk_report hawk_report;

hawk_ctx* hawk_ctx_new(void);
void hawk_ctx_free(hawk_ctx* ctx);

/* Overrides the rewrite step budget (default 1000000, minimum 1). */
void hawk_ctx_set_step_budget(hawk_ctx* ctx, uint64_t budget);

/* Message for the most recent failing call on this context. */
const char* hawk_ctx_last_error(const hawk_ctx* ctx);

/* Parsing .haw sources. `name` is used in diagnostics and may be NULL. */
hawk_status hawk_parse_string(hawk_ctx* ctx, const char* text, const char* name,
                              hawk_source** out);
hawk_status hawk_parse_file(hawk_ctx* ctx, const char* path, hawk_source** out);
void hawk_source_free(hawk_source* source);

/* Checks every theorem in the source's declared logic. */
hawk_status hawk_check(hawk_ctx* ctx, const hawk_source* source, hawk_report** out);

/* Translates every theorem into the base logic, re-checking the output; on
 * full success hawk_report_text holds the translated .haw file. */
hawk_status hawk_translate(hawk_ctx* ctx, const hawk_source* source, hawk_report** out);

/* Normalizes a term. `expr` may start with `def` declarations; the report
 * text holds the normal form (and the rewrite trace when with_trace != 0). */
hawk_status hawk_normalize(hawk_ctx* ctx, const char* expr, int with_trace, hawk_report** out);

/* Reduction experiment over the closed peel-free proofs of the source;
 * hawk_report_ok is 1 iff no internal errors occurred (joinable/unknown are
 * recorded per instance, never asserted). max_steps == 0 uses the default. */
hawk_status hawk_conjecture(hawk_ctx* ctx, const hawk_source* source, uint64_t max_steps,
                            hawk_report** out);

/* Runs the bundled corpus (name-substring filter, NULL or "" for all). The
 * report text has one tab-separated line per item. */
hawk_status hawk_corpus(hawk_ctx* ctx, const char* filter, hawk_report** out);

int hawk_report_ok(const hawk_report* report);
size_t hawk_report_item_count(const hawk_report* report);
const char* hawk_report_item_name(const hawk_report* report, size_t index);
int hawk_report_item_ok(const hawk_report* report, size_t index);
const char* hawk_report_item_detail(const hawk_report* report, size_t index);
const char* hawk_report_text(const hawk_report* report);
void hawk_report_free(hawk_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HAWK_H */
