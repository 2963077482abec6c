/* isop -- radial log-power solution bases for iterated singular operators.
 *
 * The library handles operator families
 *
 *     L_j u = sum_i (r/x_i)^p [ x_i^2 d2u/dx_i^2 + alpha_i^(j) x_i du/dx_i ] + lambda_j u,
 *     r^p   = x_1^p + ... + x_n^p,
 *
 * and constructs, for products (L_1^{k_1} ... L_q^{k_q}) u = 0, the explicit
 * solution basis of power-log terms r^m (ln r)^l together with symbolic and
 * finite-difference verification of every emitted term.
 *
 * All functions are thread-safe; handles are immutable after construction
 * except where a setter is documented. Errors are reported through the
 * returned status code plus a thread-local message (isop_last_error).
 */

#ifndef ISOP_H
#define ISOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ISOP_API __declspec(dllexport)
#else
#define ISOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isop_status {
  ISOP_OK = 0,
  ISOP_ERR_ARGUMENT = 1,   /* null handle, bad index, length mismatch */
  ISOP_ERR_PARSE = 2,      /* spec document is not well-formed */
  ISOP_ERR_VALIDATION = 3, /* spec document violates the schema */
  ISOP_ERR_DOMAIN = 4,     /* point outside the positive orthant */
  ISOP_ERR_CAPABILITY = 5, /* request exceeds a configured cap */
  ISOP_ERR_IO = 6          /* file not readable */
} isop_status;

typedef enum isop_mode {
  ISOP_MODE_PAPER_LITERAL = 0,
  ISOP_MODE_COMBINED_MULTIPLICITY = 1
} isop_mode;

/* Characteristic classification of one factor: sign of phi^2 - lambda. */
typedef enum isop_case {
  ISOP_CASE_I1_REAL_DISTINCT = 0,
  ISOP_CASE_I2_COMPLEX_PAIR = 1,
  ISOP_CASE_I3_DOUBLE_ROOT = 2
} isop_case;

typedef enum isop_term_kind {
  ISOP_TERM_POWER_LOG = 0, /* r^(-phi+mu) (ln r)^l          */
  ISOP_TERM_COS_LOG = 1,   /* r^(-phi) cos(mu ln r) (ln r)^l */
  ISOP_TERM_SIN_LOG = 2    /* r^(-phi) sin(mu ln r) (ln r)^l */
} isop_term_kind;

typedef struct isop_problem isop_problem;
typedef struct isop_basis isop_basis;
typedef struct isop_report isop_report;

typedef struct isop_factor_info {
  size_t alpha_count;
  double lambda;
  int k; /* iteration count */
} isop_factor_info;

typedef struct isop_factor_analysis {
  double phi;
  double disc; /* phi^2 - lambda */
  int case_class; /* isop_case */
  double root1_re, root1_im; /* -phi + sqrt(disc) */
  double root2_re, root2_im; /* -phi - sqrt(disc) */
} isop_factor_analysis;

typedef struct isop_term_info {
  int kind; /* isop_term_kind */
  double phi;
  double mu;       /* power offset, or cos/sin frequency */
  double exponent; /* -phi+mu for power terms, -phi otherwise */
  int log_power;
  int factor; /* 1-based producing factor; 0 for injected terms */
} isop_term_info;

typedef struct isop_term_report {
  double symbolic_residual; /* scale-normalized max surviving coefficient */
  int symbolic_passed;
  double numeric_max_rel;
  double numeric_mean_rel;
  int numeric_passed; /* also 1 when the numeric stage was skipped */
  int passed;
} isop_term_report;

ISOP_API const char* isop_version(void);

/* Message for the most recent failure on this thread; never NULL. */
ISOP_API const char* isop_last_error(void);

/* Frees strings returned through char** out-parameters. */
ISOP_API void isop_string_free(char* s);

/* ---- problem ----------------------------------------------------------- */

/* Parses a spec document (see README for the schema). Unknown keys are
 * rejected. On success *out owns the problem and must be freed. */
ISOP_API isop_status isop_problem_from_string(const char* text,
                                              isop_problem** out);
ISOP_API isop_status isop_problem_from_file(const char* path,
                                            isop_problem** out);
ISOP_API void isop_problem_free(isop_problem* p);

ISOP_API double isop_problem_p(const isop_problem* p);
ISOP_API int isop_problem_n(const isop_problem* p);
ISOP_API size_t isop_problem_factor_count(const isop_problem* p);
ISOP_API isop_status isop_problem_factor(const isop_problem* p, size_t j,
                                         isop_factor_info* out);
ISOP_API isop_status isop_problem_factor_alpha(const isop_problem* p, size_t j,
                                               size_t i, double* out);

/* Characteristic quantities and roots of factor j (0-based). */
ISOP_API isop_status isop_problem_analyze(const isop_problem* p, size_t j,
                                          isop_factor_analysis* out);

/* Verification options (defaults: seed 0, 100 points, h_rel 1e-5,
 * eps_case 1e-9, paper-literal mode). */
ISOP_API uint64_t isop_problem_seed(const isop_problem* p);
ISOP_API int isop_problem_points(const isop_problem* p);
ISOP_API double isop_problem_h_rel(const isop_problem* p);
ISOP_API double isop_problem_eps_case(const isop_problem* p);
ISOP_API int isop_problem_mode(const isop_problem* p);
ISOP_API void isop_problem_set_seed(isop_problem* p, uint64_t seed);
ISOP_API isop_status isop_problem_set_points(isop_problem* p, int points);
ISOP_API isop_status isop_problem_set_h_rel(isop_problem* p, double h_rel);
ISOP_API isop_status isop_problem_set_mode(isop_problem* p, int mode);

/* ---- basis ------------------------------------------------------------- */

ISOP_API isop_status isop_basis_build(const isop_problem* p, isop_basis** out);
ISOP_API void isop_basis_free(isop_basis* b);
ISOP_API size_t isop_basis_size(const isop_basis* b);
ISOP_API isop_status isop_basis_term(const isop_basis* b, size_t i,
                                     isop_term_info* out);

/* Canonical rendering of term i ("r^(-1.0) * (ln r)^2"); owned by the
 * basis, valid until it is freed. NULL on bad index. */
ISOP_API const char* isop_basis_term_text(const isop_basis* b, size_t i);

/* Appends a foreign power term r^exponent (ln r)^log_power. Meant for
 * negative controls: the verification stages must flag it. */
ISOP_API isop_status isop_basis_inject_power(isop_basis* b, double exponent,
                                             int log_power);

/* Evaluates sum_i coeffs[i] * term_i at a point of the positive orthant.
 * coeffs may be NULL (all ones); otherwise n_coeffs must equal the basis
 * size. n_point must equal the problem dimension. */
ISOP_API isop_status isop_basis_eval(const isop_basis* b, const double* coeffs,
                                     size_t n_coeffs, const double* point,
                                     size_t n_point, double* out);

/* Machine-readable basis listing; *out is malloc'd, release with
 * isop_string_free. */
ISOP_API isop_status isop_basis_to_json(const isop_basis* b, char** out);

/* ---- verification ------------------------------------------------------ */

/* Runs the symbolic annihilation check on every basis term, then the
 * hybrid finite-difference residual check on a seeded point cloud in
 * [0.5, 2]^n (skipped when the problem's point count is 0). The basis must
 * have been built from p (injected terms aside). */
ISOP_API isop_status isop_verify(const isop_problem* p, const isop_basis* b,
                                 isop_report** out);
ISOP_API void isop_report_free(isop_report* r);
ISOP_API int isop_report_passed(const isop_report* r);
ISOP_API int isop_report_numeric_skipped(const isop_report* r);
ISOP_API size_t isop_report_term_count(const isop_report* r);
ISOP_API isop_status isop_report_term(const isop_report* r, size_t i,
                                      isop_term_report* out);
ISOP_API isop_status isop_report_to_json(const isop_report* r, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ISOP_H */
