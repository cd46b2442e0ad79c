/* C interface for the expfield workbench.
 *
 * Status codes follow the CLI exit conventions:
 *   0  computed
 *   2  input error (syntax, unknown names, bad arguments)
 *   3  resource limit exhausted
 * On a nonzero status, expfield_last_error() describes the failure.
 */

#ifndef EXPFIELD_H
#define EXPFIELD_H

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handle to a parsed .efd document. */
typedef struct ExpfieldDoc ExpfieldDoc;

/* Parse a NUL-terminated .efd source text. On success writes a handle
 * to *out and returns 0. Free the handle with expfield_doc_free. */
int expfield_doc_parse(const char *src, ExpfieldDoc **out);

/* Release a document handle. Null is ignored. */
void expfield_doc_free(ExpfieldDoc *doc);

/* Run one command (validate, td, ldim, delta, xi-dim, cl-member,
 * exchange, khovanskii-verify, ecl-cl-check, strong, extend-derivation,
 * ax-check, dim, chain, essential) against a parsed document.
 *
 * args:   nargs NUL-terminated strings, field name first, then tuples,
 *         elements, certificate names, or name=value assignments.
 * over:   relativization ("base", "Q", or comma-separated generator
 *         names); null selects the default ("base").
 * bound:  search bound for integer coordinates (the CLI default is 3).
 *
 * On success writes a heap-allocated JSON report to *out_json (release
 * it with expfield_string_free) and returns 0. */
int expfield_run(const ExpfieldDoc *doc,
                 const char *command,
                 const char *const *args,
                 int nargs,
                 const char *over,
                 int bound,
                 char **out_json);

/* Release a string returned by expfield_run. Null is ignored. */
void expfield_string_free(char *s);

/* The last error recorded on the calling thread. The pointer stays
 * valid until the next failing call on the same thread. */
const char *expfield_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* EXPFIELD_H */
