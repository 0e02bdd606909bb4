/*
 * Copyright 2026 The efp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the efp shared library.
 *
 * The library computes the emptiness formation probability P(n) of a
 * two-reservoir free-fermion chain as an exact Toeplitz determinant and
 * evaluates every constant of its large-n decay law
 *
 *     P(n) ~ G^n * n^Q * F.
 *
 * All entry points return an efp_status; on failure a human-readable
 * message for the calling thread is available from efp_last_error().
 * Handles are opaque and must be released with their destroy function.
 */

#ifndef EFP_H
#define EFP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EFP_API __declspec(dllexport)
#else
#define EFP_API __attribute__((visibility("default")))
#endif

typedef enum efp_status {
    EFP_OK = 0,
    EFP_ERR_VALIDATION = 1,   /* rejected input (bounds, shapes, names) */
    EFP_ERR_NUMERIC = 2,      /* numerical failure during computation */
    EFP_ERR_VERIFICATION = 3, /* a verification suite reported failures */
    EFP_ERR_INTERNAL = 4
} efp_status;

EFP_API const char* efp_version(void);
EFP_API const char* efp_strerror(int status);
/* message of the most recent failure on the calling thread, never NULL */
EFP_API const char* efp_last_error(void);

/* ------------------------------------------------------------------ */
/* model handle                                                        */
/* ------------------------------------------------------------------ */

typedef struct efp_model efp_model;

typedef struct efp_model_options {
    int log_radius;          /* log-symbol series radius (default 512) */
    int min_panels;          /* quadrature panels per smooth arc floor (default 4) */
    double coeff_err_target; /* per-coefficient absolute target (default 1e-12) */
} efp_model_options;

EFP_API void efp_model_options_init(efp_model_options* opts);

/* beta_l, beta_r: inverse reservoir temperatures, 0 < beta_l <= beta_r;
 * lambda: magnetic field. opts may be NULL for defaults. */
EFP_API efp_status efp_model_create(double beta_l, double beta_r, double lambda,
                                    const efp_model_options* opts, efp_model** out);
EFP_API void efp_model_destroy(efp_model* model);

/* ------------------------------------------------------------------ */
/* decay-law constants                                                 */
/* ------------------------------------------------------------------ */

typedef struct efp_constants {
    double log_g;          /* log G, exponential decay base */
    double log_g_integral; /* same constant via the reservoir average route */
    double q;              /* power-law exponent Q */
    double q_direct;       /* Q via the occupation-ratio route */
    double log_f;          /* Re log F */
    double log_f_imag;     /* imaginary residue of log F */
    double beta1_re, beta1_im; /* jump phase at t = 1 (0 if absent) */
    double beta2_re, beta2_im; /* jump phase at t = -1 (0 if absent) */
    double e_b_re, e_b_im;     /* strong-Szego constant E(b) */
    double e_b_tail_bound;
    double b_plus1_re, b_plus1_im;   /* one-sided factors at t = 1 */
    double b_minus1_re, b_minus1_im;
    double b_plus2_re, b_plus2_im;   /* one-sided factors at t = -1 */
    double b_minus2_re, b_minus2_im;
    double barnes1_re, barnes1_im;   /* Barnes factor at t = 1 */
    double barnes2_re, barnes2_im;   /* Barnes factor at t = -1 */
    double cross_re, cross_im;       /* cross factor (2^{2 b1 b2} here) */
    double two_path_gap;             /* general vs specialized F, relative */
    int jump_count;
} efp_constants;

EFP_API efp_status efp_model_constants(efp_model* model, efp_constants* out);

/* ------------------------------------------------------------------ */
/* exact determinants and the asymptote                                */
/* ------------------------------------------------------------------ */

EFP_API efp_status efp_model_log_probability(efp_model* model, int n, double* out);
EFP_API efp_status efp_model_log_asymptote(efp_model* model, int n, double* out);

typedef struct efp_table_row {
    int n;
    double log_det;
    double log_asymptote;
    double residual_y; /* log_det - n log G */
    double ratio;      /* exp(log_det - log_asymptote) */
} efp_table_row;

EFP_API efp_status efp_model_table_row(efp_model* model, int n, efp_table_row* out);

/* ------------------------------------------------------------------ */
/* power-law fit                                                       */
/* ------------------------------------------------------------------ */

typedef struct efp_fit_report {
    double q_hat;
    double log_f_hat;
    double q_reference;
    double log_f_reference;
    double q_gap_rel;
    double log_f_gap_abs;
    size_t rows_used;
} efp_fit_report;

/* Fits residual_y = Q log n + c over the given n values; entries below
 * n = 32 are ignored and at least four rows must remain. */
EFP_API efp_status efp_model_fit(efp_model* model, const int* ns, size_t count,
                                 efp_fit_report* out);

/* ------------------------------------------------------------------ */
/* figure data                                                         */
/* ------------------------------------------------------------------ */

/* which: "symbol" (the density s_-) or "regularized" (the continuous
 * factor b). Fills k_out/value_out with `samples` points over (-pi, pi],
 * avoiding the exact jump angles. */
EFP_API efp_status efp_model_figure(efp_model* model, const char* which, size_t samples,
                                    double* k_out, double* value_out);

/* ------------------------------------------------------------------ */
/* verification suites                                                 */
/* ------------------------------------------------------------------ */

typedef struct efp_verify_report efp_verify_report;

/* suite: "all", "symbol", "toeplitz" or "fh". Returns EFP_OK even when
 * checks fail; inspect the report. */
EFP_API efp_status efp_verify_run(efp_model* model, const char* suite,
                                  efp_verify_report** out);
EFP_API size_t efp_verify_check_count(const efp_verify_report* report);
EFP_API int efp_verify_all_passed(const efp_verify_report* report);
EFP_API int efp_verify_check_passed(const efp_verify_report* report, size_t index);
EFP_API const char* efp_verify_check_name(const efp_verify_report* report, size_t index);
EFP_API const char* efp_verify_check_detail(const efp_verify_report* report, size_t index);
EFP_API void efp_verify_report_destroy(efp_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* EFP_H */
