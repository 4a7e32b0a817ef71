/*
 * Copyright 2026 The ghzw Authors
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
 * C interface to the ghzw teleportation/decoherence library.
 *
 * Conventions:
 *   - Every fallible call returns ghzw_status; results come back through
 *     out-pointers. On failure the out-pointers are left untouched and
 *     ghzw_last_error() describes the problem (per thread).
 *   - Objects are opaque handles created by *_create / constructor calls and
 *     released with the matching *_destroy. Destroying NULL is a no-op.
 *   - Qubit indices are 0-based; qubit 0 is the most significant bit of a
 *     basis-state index, and bit value 0 is |0>.
 *   - gt is the dimensionless product gamma * t.
 */

#ifndef GHZW_GHZW_H_
#define GHZW_GHZW_H_

#include <stddef.h>

#if defined _WIN32 || defined __CYGWIN__
#  ifdef GHZW_BUILDING_LIBRARY
#    define GHZW_API __declspec(dllexport)
#  else
#    define GHZW_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && __GNUC__ >= 4
#  define GHZW_API __attribute__((visibility("default")))
#else
#  define GHZW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghzw_status {
  GHZW_OK = 0,
  GHZW_ERROR_INVALID_ARGUMENT = 1, /* bad pointer, index, range or dimension */
  GHZW_ERROR_UNSUPPORTED = 2,      /* combination with no model, e.g. closed form for "both" */
  GHZW_ERROR_INVARIANT = 3,        /* result would not be a valid density matrix */
  GHZW_ERROR_INTERNAL = 4
} ghzw_status;

typedef enum ghzw_environment {
  GHZW_ENV_ZERO_TEMPERATURE = 0,
  GHZW_ENV_INFINITE_TEMPERATURE = 1,
  GHZW_ENV_DEPHASING = 2
} ghzw_environment;

typedef enum ghzw_channel {
  GHZW_CHANNEL_NONE = -1, /* only valid with GHZW_SCENARIO_INPUT */
  GHZW_CHANNEL_GHZ = 0,
  GHZW_CHANNEL_W = 1
} ghzw_channel;

typedef enum ghzw_scenario {
  GHZW_SCENARIO_INPUT = 0,   /* the state to be teleported decoheres */
  GHZW_SCENARIO_CHANNEL = 1, /* the shared three-qubit resource decoheres */
  GHZW_SCENARIO_BOTH = 2     /* both; simulation only */
} ghzw_scenario;

typedef struct ghzw_config {
  ghzw_scenario scenario;
  ghzw_environment env;
  ghzw_channel channel;
} ghzw_config;

typedef struct ghzw_density_matrix ghzw_density_matrix;
typedef struct ghzw_protocol ghzw_protocol;
typedef struct ghzw_simulator ghzw_simulator;

GHZW_API const char* ghzw_version(void);
/* Message for the most recent failure on the calling thread ("" if none). */
GHZW_API const char* ghzw_last_error(void);
GHZW_API const char* ghzw_status_string(ghzw_status status);

/* ---- density matrices ------------------------------------------------ */

GHZW_API ghzw_status ghzw_dm_ghz(ghzw_density_matrix** out);
GHZW_API ghzw_status ghzw_dm_w(ghzw_density_matrix** out);
/* |phi_in><phi_in| with theta in [0, pi], phi in [0, 2 pi]. */
GHZW_API ghzw_status ghzw_dm_input(double theta, double phi, ghzw_density_matrix** out);
/* Row-major dim x dim entries; validated as a density matrix. */
GHZW_API ghzw_status ghzw_dm_from_entries(int dim, const double* re, const double* im,
                                          ghzw_density_matrix** out);
GHZW_API void ghzw_dm_destroy(ghzw_density_matrix* rho);

GHZW_API int ghzw_dm_dim(const ghzw_density_matrix* rho);
GHZW_API ghzw_status ghzw_dm_entry(const ghzw_density_matrix* rho, int row, int col, double* re,
                                   double* im);
GHZW_API ghzw_status ghzw_dm_partial_trace(const ghzw_density_matrix* rho, const int* keep,
                                           size_t keep_count, ghzw_density_matrix** out);
/* <phi_in(theta, phi)| rho |phi_in(theta, phi)> for a one-qubit rho. */
GHZW_API ghzw_status ghzw_dm_fidelity(const ghzw_density_matrix* rho, double theta, double phi,
                                      double* out);

/* ---- decoherence ----------------------------------------------------- */

/* Fixed-step RK4 integration of the master equation from 0 to t. */
GHZW_API ghzw_status ghzw_evolve_rk4(const ghzw_density_matrix* rho0, ghzw_environment env,
                                     double gamma, double t, int steps, ghzw_density_matrix** out);
GHZW_API ghzw_status ghzw_closed_single_qubit(const ghzw_density_matrix* rho0,
                                              ghzw_environment env, double gt,
                                              ghzw_density_matrix** out);
/* Exact decohered GHZ or W state. */
GHZW_API ghzw_status ghzw_closed_channel(ghzw_channel channel, ghzw_environment env, double gt,
                                         ghzw_density_matrix** out);

/* ---- teleportation --------------------------------------------------- */

GHZW_API ghzw_status ghzw_protocol_create(ghzw_channel channel, ghzw_protocol** out);
GHZW_API void ghzw_protocol_destroy(ghzw_protocol* protocol);
/* Entry (row, col) of the 16x16 protocol unitary. */
GHZW_API ghzw_status ghzw_protocol_entry(const ghzw_protocol* protocol, int row, int col,
                                         double* re, double* im);
GHZW_API ghzw_status ghzw_teleport(const ghzw_protocol* protocol,
                                   const ghzw_density_matrix* rho_in,
                                   const ghzw_density_matrix* rho_channel,
                                   ghzw_density_matrix** out);
/* Human-readable description of the W complement-outcome corrections in use. */
GHZW_API const char* ghzw_w_complement_assignment(void);

/* ---- analysis -------------------------------------------------------- */

GHZW_API ghzw_status ghzw_fidelity_closed(const ghzw_config* config, double theta, double gt,
                                          double* out);
GHZW_API ghzw_status ghzw_fidelity_simulated(const ghzw_config* config, double theta, double phi,
                                             double gt, double* out);

/* Decohered states for one (config, gt), reused across input states. */
GHZW_API ghzw_status ghzw_simulator_create(const ghzw_config* config, double gt,
                                           ghzw_simulator** out);
GHZW_API void ghzw_simulator_destroy(ghzw_simulator* sim);
GHZW_API ghzw_status ghzw_simulator_fidelity(const ghzw_simulator* sim, double theta, double phi,
                                             double* out);

GHZW_API ghzw_status ghzw_average_fidelity_closed(const ghzw_config* config, double gt,
                                                  double* out);
/* Gauss-Legendre Bloch average of the closed-form fidelity (n_nodes >= 8). */
GHZW_API ghzw_status ghzw_average_fidelity_quadrature(const ghzw_config* config, double gt,
                                                      int n_nodes, double* out);
/* Gauss-Legendre Bloch average of the simulated fidelity (n_nodes >= 8). */
GHZW_API ghzw_status ghzw_average_fidelity_simulated(const ghzw_config* config, double gt,
                                                     int n_nodes, double* out);

typedef struct ghzw_critical_time {
  int is_finite; /* 0: the average fidelity never drops below 2/3 */
  double gt_c;   /* meaningful only when is_finite != 0 */
} ghzw_critical_time;

GHZW_API ghzw_status ghzw_critical_time_find(const ghzw_config* config, ghzw_critical_time* out);
/* Zero-temperature channel decoherence only. */
GHZW_API ghzw_status ghzw_monotonicity_switch(ghzw_channel channel, double* out);

typedef struct ghzw_crossover {
  double theta_low;  /* fraction of pi */
  double theta_high; /* fraction of pi */
  int empty;         /* GHZ at least as good everywhere */
  int w_wins_inside; /* 1: W ahead inside (low, high); 0: outside */
} ghzw_crossover;

GHZW_API ghzw_status ghzw_robustness_crossover(ghzw_environment env, double gt,
                                               ghzw_crossover* out);

/* ---- validation ------------------------------------------------------ */

typedef struct ghzw_check_result {
  const char* name;
  int passed;
  double measured;
  double tolerance;
  const char* detail;
} ghzw_check_result;

typedef void (*ghzw_check_callback)(const ghzw_check_result* result, void* user_data);

typedef struct ghzw_tolerance_override {
  const char* check_prefix;
  double tolerance;
} ghzw_tolerance_override;

typedef struct ghzw_validate_options {
  const ghzw_tolerance_override* overrides;
  size_t override_count;
  /* Test hook: drop Bob's conditional Z from the GHZ circuit. */
  int inject_ghz_correction_fault;
} ghzw_validate_options;

typedef struct ghzw_validate_summary {
  int passed;
  int failed;
  /* Name of the first failing check, or "" when all passed. */
  char first_failure[128];
} ghzw_validate_summary;

/* Runs the full self-check suite. `options` and `callback` may be NULL. */
GHZW_API ghzw_status ghzw_validate(const ghzw_validate_options* options,
                                   ghzw_check_callback callback, void* user_data,
                                   ghzw_validate_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* GHZW_GHZW_H_ */
