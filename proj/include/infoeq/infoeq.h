/*
 * Copyright 2026 The infoeq Authors
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
 * infoeq C API.
 *
 * Every object is an opaque handle created by an infoeq_*_new / _load /
 * producing call and released with the matching _free. Functions return an
 * infoeq_status; on failure infoeq_last_error() describes the problem for
 * the calling thread. Output paths may be "-" for standard output.
 */
#ifndef INFOEQ_INFOEQ_H_
#define INFOEQ_INFOEQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(INFOEQ_BUILDING_LIBRARY)
#define INFOEQ_API __attribute__((visibility("default")))
#else
#define INFOEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum infoeq_status {
  INFOEQ_OK = 0,
  INFOEQ_ERR_INVALID_ARGUMENT = 1,
  INFOEQ_ERR_IO = 2,
  INFOEQ_ERR_PARSE = 3,
  INFOEQ_ERR_DUPLICATE_TIMESTAMP = 4,
  INFOEQ_ERR_EMPTY_INPUT = 5,
  INFOEQ_ERR_OUT_OF_RANGE = 6,
  INFOEQ_ERR_DOMAIN = 7,
  INFOEQ_ERR_MODEL_DOMAIN = 8,
  INFOEQ_ERR_SINGULAR_FIT = 9,
  INFOEQ_ERR_RANK_DEFICIENT = 10,
  INFOEQ_ERR_DEGENERATE_EQUILIBRIUM = 11,
  INFOEQ_ERR_INSUFFICIENT_DATA = 12,
  INFOEQ_ERR_UNKNOWN_MODEL = 13,
  INFOEQ_ERR_INTERNAL = 14
} infoeq_status;

/* Process exit codes of the command-line contract. */
enum {
  INFOEQ_EXIT_OK = 0,
  INFOEQ_EXIT_USAGE = 1,
  INFOEQ_EXIT_INPUT = 2,
  INFOEQ_EXIT_DOMAIN = 3,
  INFOEQ_EXIT_NOT_CONVERGED = 4
};

INFOEQ_API const char* infoeq_version(void);
INFOEQ_API const char* infoeq_status_name(infoeq_status status);
INFOEQ_API int infoeq_exit_code(infoeq_status status);

/* Message for the most recent failure on this thread ("" if none). */
INFOEQ_API const char* infoeq_last_error(void);
/* 1 and *at set when the last failure was a model-domain error at a known
 * abscissa, else 0. */
INFOEQ_API int infoeq_last_error_point(double* at);

/* ---- time series ------------------------------------------------------ */

typedef struct infoeq_series infoeq_series;

INFOEQ_API infoeq_status infoeq_series_load(const char* path, infoeq_series** out);
INFOEQ_API infoeq_status infoeq_series_from_arrays(const double* t, const double* v,
                                                   size_t n, infoeq_series** out);
INFOEQ_API infoeq_status infoeq_series_save(const infoeq_series* s, const char* path);
INFOEQ_API size_t infoeq_series_size(const infoeq_series* s);
INFOEQ_API infoeq_status infoeq_series_get(const infoeq_series* s, size_t i, double* t,
                                           double* v);
INFOEQ_API void infoeq_series_free(infoeq_series* s);

INFOEQ_API infoeq_status infoeq_loess(const infoeq_series* in, int degree, double span,
                                      infoeq_series** out);
INFOEQ_API infoeq_status infoeq_log_growth(const infoeq_series* in, infoeq_series** out);
INFOEQ_API infoeq_status infoeq_interp(const infoeq_series* s, double t, double* out);

/* ---- grids ------------------------------------------------------------ */

typedef struct infoeq_grid infoeq_grid;

/* "start:stop:count", linear or (log_spaced != 0) logarithmic. */
INFOEQ_API infoeq_status infoeq_grid_parse(const char* spec, int log_spaced,
                                           infoeq_grid** out);
INFOEQ_API infoeq_status infoeq_grid_from_series(const infoeq_series* s, infoeq_grid** out);
INFOEQ_API size_t infoeq_grid_size(const infoeq_grid* g);
INFOEQ_API const double* infoeq_grid_values(const infoeq_grid* g);
INFOEQ_API void infoeq_grid_free(infoeq_grid* g);

/* ---- parameters ------------------------------------------------------- */

typedef struct infoeq_params infoeq_params;

INFOEQ_API infoeq_status infoeq_params_new(infoeq_params** out);
INFOEQ_API infoeq_status infoeq_params_load(const char* path, infoeq_params** out);
INFOEQ_API infoeq_status infoeq_params_set(infoeq_params* p, const char* key, double value);
INFOEQ_API infoeq_status infoeq_params_get(const infoeq_params* p, const char* key,
                                           double* out);
INFOEQ_API void infoeq_params_free(infoeq_params* p);

/* ---- named inputs ----------------------------------------------------- */

typedef struct infoeq_inputs infoeq_inputs;

INFOEQ_API infoeq_status infoeq_inputs_new(infoeq_inputs** out);
/* Copies the series under `name`, replacing any previous entry. */
INFOEQ_API infoeq_status infoeq_inputs_add(infoeq_inputs* in, const char* name,
                                           const infoeq_series* s);
INFOEQ_API void infoeq_inputs_free(infoeq_inputs* in);

/* Comma-separated names of the input series a model reads. */
INFOEQ_API const char* infoeq_eval_inputs(const char* model);
INFOEQ_API const char* infoeq_fit_inputs(const char* model);

/* ---- tables ----------------------------------------------------------- */

typedef struct infoeq_table infoeq_table;

INFOEQ_API size_t infoeq_table_rows(const infoeq_table* t);
INFOEQ_API size_t infoeq_table_cols(const infoeq_table* t);
INFOEQ_API const char* infoeq_table_column(const infoeq_table* t, size_t col);
INFOEQ_API double infoeq_table_get(const infoeq_table* t, size_t row, size_t col);
INFOEQ_API infoeq_status infoeq_table_save(const infoeq_table* t, const char* path);
INFOEQ_API void infoeq_table_free(infoeq_table* t);

/* ---- model evaluation and fitting ------------------------------------- */

typedef struct infoeq_smooth_opts {
  int enabled;
  int degree;
  double span;
} infoeq_smooth_opts;

/* smooth may be NULL. */
INFOEQ_API infoeq_status infoeq_eval(const char* model, const infoeq_inputs* inputs,
                                     const infoeq_params* params, const infoeq_grid* grid,
                                     const infoeq_smooth_opts* smooth, infoeq_table** out);

typedef struct infoeq_fit_result infoeq_fit_result;

/* tol <= 0 and max_iter <= 0 select the defaults (1e-8, 10000). */
INFOEQ_API infoeq_status infoeq_fit(const char* model, const infoeq_inputs* inputs,
                                    const infoeq_params* x0, const infoeq_grid* grid,
                                    const infoeq_smooth_opts* smooth, double tol,
                                    int max_iter, infoeq_fit_result** out);
INFOEQ_API size_t infoeq_fit_param_count(const infoeq_fit_result* r);
INFOEQ_API const char* infoeq_fit_param_name(const infoeq_fit_result* r, size_t i);
INFOEQ_API double infoeq_fit_param_value(const infoeq_fit_result* r, size_t i);
INFOEQ_API double infoeq_fit_f_star(const infoeq_fit_result* r);
INFOEQ_API double infoeq_fit_f_initial(const infoeq_fit_result* r);
INFOEQ_API int infoeq_fit_iterations(const infoeq_fit_result* r);
INFOEQ_API int infoeq_fit_converged(const infoeq_fit_result* r);
INFOEQ_API double infoeq_fit_rmse(const infoeq_fit_result* r);
INFOEQ_API infoeq_status infoeq_fit_report_save(const infoeq_fit_result* r, const char* path);
INFOEQ_API void infoeq_fit_result_free(infoeq_fit_result* r);

/* ---- ensemble --------------------------------------------------------- */

typedef struct infoeq_mc_config infoeq_mc_config;

INFOEQ_API infoeq_status infoeq_mc_config_new(infoeq_mc_config** out);
INFOEQ_API infoeq_status infoeq_mc_config_load(const char* path, infoeq_mc_config** out);
INFOEQ_API int infoeq_mc_config_has_seed(const infoeq_mc_config* c);
INFOEQ_API infoeq_status infoeq_mc_config_set_seed(infoeq_mc_config* c, uint64_t seed);
/* Keys: n0, a_mean, a_sd, runs. */
INFOEQ_API infoeq_status infoeq_mc_config_set(infoeq_mc_config* c, const char* key,
                                              double value);
INFOEQ_API infoeq_status infoeq_mc_config_set_grid(infoeq_mc_config* c,
                                                   const infoeq_grid* m_grid);
INFOEQ_API void infoeq_mc_config_free(infoeq_mc_config* c);

/* Columns run,m,avg_a,avg_n,avg_price ordered by (run, grid index). The
 * output does not depend on `threads` (0 = hardware concurrency). */
INFOEQ_API infoeq_status infoeq_monte_carlo(const infoeq_mc_config* c, unsigned threads,
                                            infoeq_table** out);

/* Histogram of successive changes of `s` (level_changes == 0: 100 x log
 * differences) with the e^delta tail curve. Columns
 * bin_left,bin_right,count,theory. */
INFOEQ_API infoeq_status infoeq_fluctuation(const infoeq_series* s, int bins,
                                            int level_changes, infoeq_table** out);

/* ---- scalar models ---------------------------------------------------- */

INFOEQ_API infoeq_status infoeq_ge_source(double k, double d_ref, double s_ref, double s,
                                          double* out);
INFOEQ_API infoeq_status infoeq_k_index(double n, double m, double alpha, double gamma,
                                        double m0, double* out);
INFOEQ_API infoeq_status infoeq_price_level(double n, double m, double alpha, double gamma,
                                            double m0, double* out);
INFOEQ_API infoeq_status infoeq_interest_rate(double n, double m, double k_i, double k_p,
                                              double* out);
INFOEQ_API infoeq_status infoeq_ridge_sigma(double kappa, double gamma, double* out);

#ifdef __cplusplus
}
#endif

#endif /* INFOEQ_INFOEQ_H_ */
