// Copyright 2026 The tqdirac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the tqdirac two-qubit simulator.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a tqd_status; on
 * failure tqd_last_error() describes the problem for the calling thread.
 */
#ifndef TQDIRAC_H
#define TQDIRAC_H

#include <stddef.h>

#if defined(TQD_BUILDING_LIBRARY)
#define TQD_API __attribute__((visibility("default")))
#else
#define TQD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tqd_status {
  TQD_OK = 0,
  TQD_ERR_INVALID_ARGUMENT = 1, /* null handle or pointer */
  TQD_ERR_CONFIG = 2,           /* invalid config or input value */
  TQD_ERR_NUMERICAL = 3,        /* propagation failed a norm/unitarity check */
  TQD_ERR_CHECK_FAILED = 4,     /* verify: at least one criterion failed */
  TQD_ERR_INTERNAL = 5
} tqd_status;

typedef enum tqd_mode { TQD_MODE_EVEN = 0, TQD_MODE_ODD = 1 } tqd_mode;

typedef struct tqd_config tqd_config;
typedef struct tqd_report tqd_report;

typedef struct tqd_derived {
  double C_s, gamma, C_M, C_G, mu_d, mu_g;
  double omega_1, omega_2, omega_g, sigma_phi1, sigma_phi2;
  int symmetric;
  /* Valid only when symmetric != 0. */
  double lambda_delta, lambda_sigma, beta_sigma, rho_c, rho_s;
} tqd_derived;

TQD_API const char* tqd_version(void);

/* Message for the last failed call on this thread ("" if none). */
TQD_API const char* tqd_last_error(void);

TQD_API tqd_status tqd_config_parse(const char* text, tqd_config** out);
TQD_API tqd_status tqd_config_load(const char* path, tqd_config** out);
TQD_API void tqd_config_free(tqd_config* cfg);

TQD_API tqd_status tqd_derive(const tqd_config* cfg, tqd_derived* out);
/* Writes <out_dir>/summary.json with the derived quantities. */
TQD_API tqd_status tqd_derive_write(const tqd_config* cfg, const char* out_dir);

/* Writes <out_dir>/series.csv and <out_dir>/summary.json. `out` may be NULL. */
TQD_API tqd_status tqd_simulate(const tqd_config* cfg, const char* out_dir, tqd_report** out);

/* Closed-form end state; writes <out_dir>/summary.json. */
TQD_API tqd_status tqd_analytic(const tqd_config* cfg, const char* out_dir,
                                double magnitudes[4], double* theta);

/* Peak voltage for `target_theta` in the config's mode and sigma_t; writes
 * <out_dir>/summary.json when out_dir is not NULL. */
TQD_API tqd_status tqd_calibrate(const tqd_config* cfg, double target_theta, const char* out_dir,
                                 double* v_s);

/* Writes <out_dir>/sweep.csv and <out_dir>/summary.json. */
TQD_API tqd_status tqd_sweep(const tqd_config* cfg, const char* axis, const double* values,
                             size_t count, const char* out_dir);

/* Runs the acceptance suite, writes <out_dir>/verify.json and reports each
 * line through `line_cb` (may be NULL). */
typedef void (*tqd_line_callback)(const char* line, void* user);
TQD_API tqd_status tqd_verify(const char* out_dir, tqd_line_callback line_cb, void* user,
                              int* failed_count);

TQD_API void tqd_report_free(tqd_report* report);
TQD_API tqd_mode tqd_report_mode(const tqd_report* report);
TQD_API void tqd_report_final_magnitudes(const tqd_report* report, double out[4]);
/* Returns 0 when no closed-form comparison exists (non-identical qubits). */
TQD_API int tqd_report_analytic_magnitudes(const tqd_report* report, double out[4]);
TQD_API double tqd_report_rms_vs_analytic(const tqd_report* report);
TQD_API double tqd_report_rms_vs_balanced(const tqd_report* report);
TQD_API double tqd_report_theta(const tqd_report* report);
TQD_API double tqd_report_v_s(const tqd_report* report);
TQD_API size_t tqd_report_steps(const tqd_report* report);
TQD_API double tqd_report_norm_drift(const tqd_report* report);
TQD_API size_t tqd_report_warning_count(const tqd_report* report);
TQD_API const char* tqd_report_warning(const tqd_report* report, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* TQDIRAC_H */
