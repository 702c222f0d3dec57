/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The eesched Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EESCHED_H
#define EESCHED_H

/*
 * C interface to the energy-efficient scheduler.
 *
 * Objects are opaque handles created by *_new / *_generate / *_run and
 * released with the matching *_free. Every fallible call returns an
 * eesched_status; on failure eesched_last_error() holds a message for the
 * calling thread until its next failing call.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EESCHED_BUILDING)
#    define EESCHED_API __declspec(dllexport)
#  else
#    define EESCHED_API __declspec(dllimport)
#  endif
#else
#  define EESCHED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eesched_status {
    EESCHED_OK = 0,
    EESCHED_ERR_INVALID_ARGUMENT = 1,
    EESCHED_ERR_DOMAIN = 2,
    EESCHED_ERR_IO = 3,
    /* an internal guarantee of the scheduler was violated */
    EESCHED_ERR_CONSISTENCY = 4,
    /* instance too large for exhaustive enumeration */
    EESCHED_ERR_TOO_LARGE = 5,
    EESCHED_ERR_BUFFER_TOO_SMALL = 6,
    EESCHED_ERR_INTERNAL = 99
} eesched_status;

typedef enum eesched_scheme {
    EESCHED_SCHEME_EE_OPTIMAL = 0,
    EESCHED_SCHEME_DINKELBACH_GLOBAL = 1,
    EESCHED_SCHEME_EE_TRANSMITTER = 2,
    EESCHED_SCHEME_EE_RECEIVER = 3,
    EESCHED_SCHEME_THROUGHPUT_OPTIMAL = 4
} eesched_scheme;

typedef enum eesched_axis {
    EESCHED_AXIS_P_MAX_DBM = 0,
    EESCHED_AXIS_P_STA_0_MW = 1
} eesched_axis;

typedef enum eesched_format {
    EESCHED_FORMAT_CSV = 0,
    EESCHED_FORMAT_CHART_EE = 1,
    EESCHED_FORMAT_CHART_USERS = 2
} eesched_format;

typedef struct eesched_config eesched_config;
typedef struct eesched_scenario eesched_scenario;
typedef struct eesched_sweep eesched_sweep;

typedef struct eesched_outcome {
    double ee_bit_per_joule;
    double rate_bps;
    size_t scheduled_users;
    int surrogate;
} eesched_outcome;

typedef struct eesched_schedule_summary {
    double ee_bit_per_joule;
    double rate_bps;
    size_t scheduled_users;
    size_t active_links;
    size_t units;
    size_t admitted_units;
    size_t user_scope_solves;
    size_t system_scope_solves;
    double transmit_mw;
    double user_dynamic_mw;
    double user_static_mw;
    double ap_dynamic_mw;
    double ap_static_mw;
    double total_mw;
} eesched_schedule_summary;

typedef struct eesched_oracle_report {
    double scheduler_ee;
    double oracle_ee;
    double relative_gap;
    size_t subsets_examined;
    size_t scheduler_links;
    size_t oracle_links;
} eesched_oracle_report;

typedef struct eesched_sweep_row {
    eesched_axis axis;
    double value;
    eesched_scheme scheme;
    double mean_ee_bit_per_joule;
    double mean_rate_bps;
    double mean_users;
    size_t trials;
    int surrogate;
} eesched_sweep_row;

EESCHED_API const char* eesched_version(void);
EESCHED_API const char* eesched_last_error(void);
EESCHED_API const char* eesched_status_string(eesched_status status);

EESCHED_API const char* eesched_scheme_name(eesched_scheme scheme);
EESCHED_API eesched_status eesched_scheme_from_name(const char* name, eesched_scheme* out);
EESCHED_API eesched_status eesched_axis_from_name(const char* name, eesched_axis* out);
/* Writes up to cap default grid values; *count receives the full length. */
EESCHED_API eesched_status eesched_axis_default_values(eesched_axis axis, double* values, size_t cap,
                                                       size_t* count);

/* Scenario configuration, initialised to the built-in defaults. */
EESCHED_API eesched_status eesched_config_new(eesched_config** out);
EESCHED_API void eesched_config_free(eesched_config* cfg);
EESCHED_API eesched_status eesched_config_load(eesched_config* cfg, const char* path);
EESCHED_API eesched_status eesched_config_set(eesched_config* cfg, const char* key, const char* value);
/* Copies the value as text, NUL-terminated; *needed receives its length + 1. */
EESCHED_API eesched_status eesched_config_get(const eesched_config* cfg, const char* key, char* buf,
                                              size_t len, size_t* needed);

EESCHED_API eesched_status eesched_scenario_generate(const eesched_config* cfg, eesched_scenario** out);
EESCHED_API void eesched_scenario_free(eesched_scenario* scenario);
EESCHED_API eesched_status eesched_scenario_counts(const eesched_scenario* scenario, size_t* users,
                                                   size_t* links);
EESCHED_API eesched_status eesched_scenario_write_csv(const eesched_scenario* scenario, const char* path);

/* Runs one scheme; results evaluated under the full power model. */
EESCHED_API eesched_status eesched_solve(const eesched_scenario* scenario, eesched_scheme scheme,
                                         eesched_outcome* out);
/* Runs the joint scheduler and reports its breakdown. */
EESCHED_API eesched_status eesched_schedule_summary_get(const eesched_scenario* scenario,
                                                        eesched_schedule_summary* out);
/* Scheduler against exhaustive enumeration; EESCHED_ERR_TOO_LARGE above 16 links. */
EESCHED_API eesched_status eesched_oracle_check(const eesched_scenario* scenario, eesched_oracle_report* out);

EESCHED_API eesched_status eesched_sweep_run(const eesched_config* base, eesched_axis axis,
                                             const double* values, size_t n_values, size_t trials,
                                             const eesched_scheme* schemes, size_t n_schemes,
                                             unsigned threads, eesched_sweep** out);
EESCHED_API void eesched_sweep_free(eesched_sweep* sweep);
EESCHED_API size_t eesched_sweep_row_count(const eesched_sweep* sweep);
EESCHED_API eesched_status eesched_sweep_row_get(const eesched_sweep* sweep, size_t index,
                                                 eesched_sweep_row* out);
EESCHED_API eesched_status eesched_sweep_write(const eesched_sweep* sweep, eesched_format format,
                                               const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EESCHED_H */
