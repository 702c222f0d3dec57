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

#include "eesched/eesched.h"

#include "eesched/experiments.hpp"
#include "eesched/oracles.hpp"
#include "eesched/scenario.hpp"
#include "eesched/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <ios>
#include <new>
#include <stdexcept>
#include <string>

struct eesched_config {
    eesched::ScenarioConfig cfg;
};

struct eesched_scenario {
    eesched::Scenario scenario;
};

struct eesched_sweep {
    std::vector<eesched::SweepRow> rows;
};

namespace {

thread_local std::string last_error;

eesched_status fail(eesched_status status, const char* message)
{
    last_error = message;
    return status;
}

// Maps exceptions from the core library onto status codes.
template <class F>
eesched_status guarded(F&& f)
{
    try {
        f();
        return EESCHED_OK;
    } catch (const eesched::ConsistencyError& e) {
        return fail(EESCHED_ERR_CONSISTENCY, e.what());
    } catch (const std::length_error& e) {
        return fail(EESCHED_ERR_TOO_LARGE, e.what());
    } catch (const std::domain_error& e) {
        return fail(EESCHED_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(EESCHED_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail(EESCHED_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EESCHED_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(EESCHED_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(EESCHED_ERR_INTERNAL, "unknown error");
    }
}

#define EESCHED_REQUIRE(cond)                                                       \
    do {                                                                            \
        if (!(cond))                                                                \
            return fail(EESCHED_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
    } while (0)

eesched::Scheme to_core(eesched_scheme s)
{
    switch (s) {
    case EESCHED_SCHEME_EE_OPTIMAL: return eesched::Scheme::ee_optimal;
    case EESCHED_SCHEME_DINKELBACH_GLOBAL: return eesched::Scheme::dinkelbach_global;
    case EESCHED_SCHEME_EE_TRANSMITTER: return eesched::Scheme::ee_transmitter;
    case EESCHED_SCHEME_EE_RECEIVER: return eesched::Scheme::ee_receiver;
    case EESCHED_SCHEME_THROUGHPUT_OPTIMAL: return eesched::Scheme::throughput_optimal;
    }
    throw std::invalid_argument("unknown scheme value " + std::to_string(static_cast<int>(s)));
}

eesched_scheme to_c(eesched::Scheme s)
{
    return static_cast<eesched_scheme>(std::find(eesched::all_schemes().begin(), eesched::all_schemes().end(), s) -
                                       eesched::all_schemes().begin());
}

eesched::SweepAxis to_core(eesched_axis a)
{
    switch (a) {
    case EESCHED_AXIS_P_MAX_DBM: return eesched::SweepAxis::p_max_dbm;
    case EESCHED_AXIS_P_STA_0_MW: return eesched::SweepAxis::p_sta_0_mw;
    }
    throw std::invalid_argument("unknown axis value " + std::to_string(static_cast<int>(a)));
}

} // namespace

extern "C" {

const char* eesched_version(void)
{
    return "1.0.0";
}

const char* eesched_last_error(void)
{
    return last_error.c_str();
}

const char* eesched_status_string(eesched_status status)
{
    switch (status) {
    case EESCHED_OK: return "ok";
    case EESCHED_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EESCHED_ERR_DOMAIN: return "domain error";
    case EESCHED_ERR_IO: return "i/o error";
    case EESCHED_ERR_CONSISTENCY: return "consistency failure";
    case EESCHED_ERR_TOO_LARGE: return "instance too large";
    case EESCHED_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case EESCHED_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* eesched_scheme_name(eesched_scheme scheme)
{
    try {
        return eesched::to_string(to_core(scheme)).data();
    } catch (...) {
        return "unknown";
    }
}

eesched_status eesched_scheme_from_name(const char* name, eesched_scheme* out)
{
    EESCHED_REQUIRE(name && out);
    const auto s = eesched::parse_scheme(name);
    if (!s)
        return fail(EESCHED_ERR_INVALID_ARGUMENT, ("unknown scheme '" + std::string(name) + "'").c_str());
    *out = to_c(*s);
    return EESCHED_OK;
}

eesched_status eesched_axis_from_name(const char* name, eesched_axis* out)
{
    EESCHED_REQUIRE(name && out);
    const auto a = eesched::parse_axis(name);
    if (!a)
        return fail(EESCHED_ERR_INVALID_ARGUMENT, ("unknown axis '" + std::string(name) + "'").c_str());
    *out = *a == eesched::SweepAxis::p_max_dbm ? EESCHED_AXIS_P_MAX_DBM : EESCHED_AXIS_P_STA_0_MW;
    return EESCHED_OK;
}

eesched_status eesched_axis_default_values(eesched_axis axis, double* values, size_t cap, size_t* count)
{
    EESCHED_REQUIRE(count && (values || cap == 0));
    return guarded([&] {
        const auto v = eesched::default_axis_values(to_core(axis));
        *count = v.size();
        std::copy_n(v.begin(), std::min(cap, v.size()), values);
    });
}

eesched_status eesched_config_new(eesched_config** out)
{
    EESCHED_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new eesched_config{}; });
}

void eesched_config_free(eesched_config* cfg)
{
    delete cfg;
}

eesched_status eesched_config_load(eesched_config* cfg, const char* path)
{
    EESCHED_REQUIRE(cfg && path);
    return guarded([&] { eesched::load_scenario_config(cfg->cfg, std::filesystem::path(path)); });
}

eesched_status eesched_config_set(eesched_config* cfg, const char* key, const char* value)
{
    EESCHED_REQUIRE(cfg && key && value);
    return guarded([&] { eesched::set_config_value(cfg->cfg, key, value); });
}

eesched_status eesched_config_get(const eesched_config* cfg, const char* key, char* buf, size_t len,
                                  size_t* needed)
{
    EESCHED_REQUIRE(cfg && key && (buf || len == 0));
    std::string value;
    const auto status = guarded([&] { value = eesched::get_config_value(cfg->cfg, key); });
    if (status != EESCHED_OK)
        return status;
    if (needed)
        *needed = value.size() + 1;
    if (len < value.size() + 1)
        return fail(EESCHED_ERR_BUFFER_TOO_SMALL, "buffer too small for config value");
    std::memcpy(buf, value.c_str(), value.size() + 1);
    return EESCHED_OK;
}

eesched_status eesched_scenario_generate(const eesched_config* cfg, eesched_scenario** out)
{
    EESCHED_REQUIRE(cfg && out);
    *out = nullptr;
    return guarded([&] { *out = new eesched_scenario{eesched::generate(cfg->cfg)}; });
}

void eesched_scenario_free(eesched_scenario* scenario)
{
    delete scenario;
}

eesched_status eesched_scenario_counts(const eesched_scenario* scenario, size_t* users, size_t* links)
{
    EESCHED_REQUIRE(scenario);
    if (users)
        *users = scenario->scenario.users.size();
    if (links) {
        size_t n = 0;
        for (const auto& u : scenario->scenario.users)
            n += u.links.size();
        *links = n;
    }
    return EESCHED_OK;
}

eesched_status eesched_scenario_write_csv(const eesched_scenario* scenario, const char* path)
{
    EESCHED_REQUIRE(scenario && path);
    return guarded([&] { eesched::write_scenario_csv(scenario->scenario, std::filesystem::path(path)); });
}

eesched_status eesched_solve(const eesched_scenario* scenario, eesched_scheme scheme, eesched_outcome* out)
{
    EESCHED_REQUIRE(scenario && out);
    return guarded([&] {
        const auto o = eesched::run_scheme(to_core(scheme), scenario->scenario);
        *out = {o.ee, o.rate, o.scheduled_users, o.surrogate ? 1 : 0};
    });
}

eesched_status eesched_schedule_summary_get(const eesched_scenario* scenario, eesched_schedule_summary* out)
{
    EESCHED_REQUIRE(scenario && out);
    return guarded([&] {
        const auto& s = scenario->scenario;
        const auto r = eesched::schedule(s.users, s.ap, s.params);
        if (!r.support_ok)
            throw eesched::ConsistencyError("admitted link ended at zero power");
        eesched_schedule_summary sum{};
        sum.ee_bit_per_joule = r.ee;
        sum.rate_bps = r.rate;
        sum.scheduled_users = r.scheduled_users.size();
        sum.active_links = r.active_links.size();
        sum.units = r.units.size();
        sum.admitted_units = r.admissions.size();
        sum.user_scope_solves = r.user_scope_solves;
        sum.system_scope_solves = r.system_scope_solves;
        sum.transmit_mw = r.power.transmit;
        sum.user_dynamic_mw = r.power.user_dynamic;
        sum.user_static_mw = r.power.user_static;
        sum.ap_dynamic_mw = r.power.ap_dynamic;
        sum.ap_static_mw = r.power.ap_static;
        sum.total_mw = r.power.total;
        *out = sum;
    });
}

eesched_status eesched_oracle_check(const eesched_scenario* scenario, eesched_oracle_report* out)
{
    EESCHED_REQUIRE(scenario && out);
    return guarded([&] {
        const auto& s = scenario->scenario;
        const auto o = eesched::global_oracle(s.users, s.ap, s.params);
        const auto r = eesched::schedule(s.users, s.ap, s.params);
        eesched_oracle_report rep{};
        rep.scheduler_ee = r.ee;
        rep.oracle_ee = o.ee;
        rep.relative_gap = o.ee > 0.0 ? std::abs(r.ee - o.ee) / o.ee : std::abs(r.ee);
        rep.subsets_examined = o.subsets_examined;
        rep.scheduler_links = r.active_links.size();
        rep.oracle_links = o.active_set.size();
        *out = rep;
    });
}

eesched_status eesched_sweep_run(const eesched_config* base, eesched_axis axis, const double* values,
                                 size_t n_values, size_t trials, const eesched_scheme* schemes, size_t n_schemes,
                                 unsigned threads, eesched_sweep** out)
{
    EESCHED_REQUIRE(base && values && schemes && out);
    *out = nullptr;
    return guarded([&] {
        eesched::SweepSpec spec;
        spec.axis = to_core(axis);
        spec.values.assign(values, values + n_values);
        spec.trials = trials;
        for (size_t i = 0; i < n_schemes; ++i)
            spec.schemes.push_back(to_core(schemes[i]));
        spec.threads = threads;
        auto rows = eesched::run_sweep(spec, base->cfg);
        *out = new eesched_sweep{std::move(rows)};
    });
}

void eesched_sweep_free(eesched_sweep* sweep)
{
    delete sweep;
}

size_t eesched_sweep_row_count(const eesched_sweep* sweep)
{
    return sweep ? sweep->rows.size() : 0;
}

eesched_status eesched_sweep_row_get(const eesched_sweep* sweep, size_t index, eesched_sweep_row* out)
{
    EESCHED_REQUIRE(sweep && out);
    if (index >= sweep->rows.size())
        return fail(EESCHED_ERR_INVALID_ARGUMENT, "sweep row index out of range");
    const auto& r = sweep->rows[index];
    *out = {r.axis == eesched::SweepAxis::p_max_dbm ? EESCHED_AXIS_P_MAX_DBM : EESCHED_AXIS_P_STA_0_MW,
            r.value,
            to_c(r.scheme),
            r.mean_ee,
            r.mean_rate,
            r.mean_users,
            r.trials,
            r.surrogate ? 1 : 0};
    return EESCHED_OK;
}

eesched_status eesched_sweep_write(const eesched_sweep* sweep, eesched_format format, const char* path)
{
    EESCHED_REQUIRE(sweep && path);
    return guarded([&] {
        const std::filesystem::path p(path);
        switch (format) {
        case EESCHED_FORMAT_CSV: eesched::write_csv(sweep->rows, p); return;
        case EESCHED_FORMAT_CHART_EE: eesched::write_svg_chart(sweep->rows, eesched::ChartMetric::mean_ee, p); return;
        case EESCHED_FORMAT_CHART_USERS:
            eesched::write_svg_chart(sweep->rows, eesched::ChartMetric::mean_users, p);
            return;
        }
        throw std::invalid_argument("unknown output format");
    });
}

} // extern "C"
