/* coposit — copositivity tests for low-order symmetric tensors.
 *
 * C API over the C++ core: opaque handles, integer status codes, string
 * getters owned by the handle they come from. Thread-safe for concurrent
 * use on distinct handles.
 */
#ifndef COPOSIT_H
#define COPOSIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct coposit_tensor coposit_tensor;
typedef struct coposit_report coposit_report;

typedef enum coposit_status {
    COPOSIT_OK = 0,
    COPOSIT_ERR_PARSE = 1,    /* malformed or invalid tensor document */
    COPOSIT_ERR_IO = 2,       /* file not readable/writable */
    COPOSIT_ERR_INVALID = 3,  /* precondition violated (bad arguments) */
    COPOSIT_ERR_INTERNAL = 4
} coposit_status;

typedef enum coposit_verdict {
    COPOSIT_STRICTLY_COPOSITIVE = 0,
    COPOSIT_COPOSITIVE = 1, /* copositive; strictness not asserted */
    COPOSIT_NOT_COPOSITIVE = 2,
    COPOSIT_UNKNOWN = 3
} coposit_verdict;

/* Stable verdict strings: STRICTLY_COPOSITIVE, COPOSITIVE, NOT_COPOSITIVE,
 * UNKNOWN. */
const char* coposit_verdict_string(coposit_verdict v);

/* ---- tensor documents ------------------------------------------------- */

/* Parses a tensor document; on failure returns a status and, when errbuf is
 * non-NULL, a diagnostic naming the offending field/entry. */
coposit_status coposit_tensor_parse(const char* text, coposit_tensor** out,
                                    char* errbuf, size_t errlen);
coposit_status coposit_tensor_load(const char* path, coposit_tensor** out,
                                   char* errbuf, size_t errlen);
coposit_status coposit_tensor_write(const coposit_tensor* t, const char* path);
/* Serialized document bytes (deterministic); owned by the tensor handle. */
const char* coposit_tensor_text(const coposit_tensor* t);
int coposit_tensor_order(const coposit_tensor* t);
int coposit_tensor_dim(const coposit_tensor* t);
void coposit_tensor_free(coposit_tensor* t);

/* ---- analyses ---------------------------------------------------------- */

/* Analytic copositivity check; with_oracle != 0 also runs the simplex-grid
 * minimizer and attaches its report. */
coposit_status coposit_check(const coposit_tensor* t, int strict, int with_oracle,
                             double tol, coposit_report** out);

/* Grid minimization report (order-4 files). denominator <= 0 selects the
 * default (60 at dim 3, 100000 at dim 2). */
coposit_status coposit_minimize(const coposit_tensor* t, long long denominator,
                                int refine, coposit_report** out);

/* Enumerates a +-1 family ("strict" or "cop"): writes the truth table to
 * out_path (or skips writing when NULL) and sets *all_agree. */
coposit_status coposit_enumerate(const char* family, const char* out_path,
                                 int* all_agree, coposit_report** out);

/* Verifies the 14 ternary quartic inequalities. samples <= 0 selects the
 * default (100000). */
coposit_status coposit_verify_inequalities(long long samples,
                                           unsigned long long seed,
                                           int* all_pass, coposit_report** out);

/* ---- reports ----------------------------------------------------------- */

coposit_verdict coposit_report_verdict(const coposit_report* r);
/* Theorem/branch tag that decided, e.g. "Thm3.4(1)", "Lem2.1(2)", "oracle". */
const char* coposit_report_method(const coposit_report* r);
/* Deterministic printable report (given identical flags and seed). */
const char* coposit_report_text(const coposit_report* r);
/* CLI exit code: 0 copositive (strictly if requested), 1 not, 2 unknown. */
int coposit_report_exit_code(const coposit_report* r, int strict);
double coposit_report_elapsed_seconds(const coposit_report* r);
void coposit_report_free(coposit_report* r);

#ifdef __cplusplus
}
#endif

#endif /* COPOSIT_H */
