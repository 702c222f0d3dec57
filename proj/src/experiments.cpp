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

#include "eesched/experiments.hpp"

#include "eesched/oracles.hpp"
#include "eesched/parallel.hpp"
#include "eesched/power_model.hpp"
#include "eesched/scheduler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eesched {

namespace {

constexpr std::pair<Scheme, std::string_view> kSchemeNames[] = {
    {Scheme::ee_optimal, "ee-optimal"},
    {Scheme::dinkelbach_global, "dinkelbach-global"},
    {Scheme::ee_transmitter, "ee-transmitter"},
    {Scheme::ee_receiver, "ee-receiver"},
    {Scheme::throughput_optimal, "throughput-optimal"},
};

std::size_t users_in(const ActiveLinkSet& active)
{
    return active.users().size();
}

void require_sound(const ScheduleResult& r, Scheme scheme)
{
    if (!r.support_ok)
        throw ConsistencyError(std::string(to_string(scheme)) + ": admitted link ended at zero power");
    if (!r.converged)
        throw ConsistencyError(std::string(to_string(scheme)) + ": fractional solve did not converge");
}

SchemeOutcome evaluate(const PowerAllocation& alloc, const Scenario& s, std::size_t users)
{
    return {system_ee(alloc, s.users, s.ap, s.params), system_rate(alloc, s.users, s.params), users, false};
}

} // namespace

std::string_view to_string(Scheme s)
{
    for (const auto& [scheme, name] : kSchemeNames) {
        if (scheme == s)
            return name;
    }
    return "unknown";
}

std::string_view to_string(SweepAxis a)
{
    return a == SweepAxis::p_max_dbm ? "p_max_dbm" : "p_sta_0_mw";
}

std::optional<Scheme> parse_scheme(std::string_view name)
{
    for (const auto& [scheme, n] : kSchemeNames) {
        if (n == name)
            return scheme;
    }
    return std::nullopt;
}

std::optional<SweepAxis> parse_axis(std::string_view name)
{
    if (name == "pmax" || name == "p_max_dbm")
        return SweepAxis::p_max_dbm;
    if (name == "psta0" || name == "p_sta_0_mw")
        return SweepAxis::p_sta_0_mw;
    return std::nullopt;
}

std::vector<Scheme> parse_scheme_list(std::string_view list)
{
    std::vector<Scheme> out;
    while (!list.empty()) {
        const auto comma = list.find(',');
        const auto name = list.substr(0, comma);
        if (!name.empty()) {
            const auto s = parse_scheme(name);
            if (!s)
                throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
            if (std::find(out.begin(), out.end(), *s) == out.end())
                out.push_back(*s);
        }
        if (comma == std::string_view::npos)
            break;
        list.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw std::invalid_argument("empty scheme list");
    return out;
}

const std::vector<Scheme>& all_schemes()
{
    static const std::vector<Scheme> v = {Scheme::ee_optimal, Scheme::dinkelbach_global, Scheme::ee_transmitter,
                                          Scheme::ee_receiver, Scheme::throughput_optimal};
    return v;
}

std::vector<double> default_axis_values(SweepAxis axis)
{
    if (axis == SweepAxis::p_max_dbm) {
        std::vector<double> v;
        for (int dbm = 0; dbm <= 45; dbm += 5)
            v.push_back(dbm);
        return v;
    }
    return {0.0, 10.0, 100.0, 1000.0, 5000.0, 1e5, 1e6};
}

SchemeOutcome run_scheme(Scheme scheme, const Scenario& s, const SolverConfig& cfg)
{
    switch (scheme) {
    case Scheme::ee_optimal: {
        const auto r = schedule(s.users, s.ap, s.params, cfg);
        require_sound(r, scheme);
        return {r.ee, r.rate, r.scheduled_users.size(), false};
    }
    case Scheme::dinkelbach_global: {
        std::size_t links = 0;
        for (const auto& u : s.users)
            links += u.links.size();
        if (links <= kMaxOracleLinks) {
            const auto o = global_oracle(s.users, s.ap, s.params, cfg);
            return evaluate(o.allocation, s, users_in(o.active_set));
        }
        // Too many links to enumerate: re-solve the scheduler's support.
        const auto r = schedule(s.users, s.ap, s.params, cfg);
        require_sound(r, scheme);
        const auto sol = solve_active_set_ee(r.active_links, s.users, s.params,
                                             circuit_charge(r.active_links, s.users, s.ap, ChargeScope::system), cfg);
        auto out = evaluate(sol.powers, s, users_in(r.active_links));
        out.surrogate = true;
        return out;
    }
    case Scheme::ee_transmitter: {
        // Receiver-side circuit power dropped from the objective only.
        const AccessPoint tx_only{0.0, 0.0};
        const auto r = schedule(s.users, tx_only, s.params, cfg);
        require_sound(r, scheme);
        return evaluate(r.allocation, s, r.scheduled_users.size());
    }
    case Scheme::ee_receiver: {
        // User-side power (transmit and circuit) dropped from the objective only.
        auto rx_users = s.users;
        for (auto& u : rx_users) {
            u.p_dyn_mw = 0.0;
            u.p_sta_mw = 0.0;
        }
        auto rx_cfg = cfg;
        rx_cfg.charge_transmit_power = false;
        const auto r = schedule(rx_users, s.ap, s.params, rx_cfg);
        require_sound(r, scheme);
        return evaluate(r.allocation, s, r.scheduled_users.size());
    }
    case Scheme::throughput_optimal: {
        PowerAllocation alloc;
        std::size_t users = 0;
        for (const auto& u : s.users) {
            for (const auto& l : u.links)
                alloc.set({u.id, l.id}, l.p_max_mw);
            users += u.links.empty() ? 0 : 1;
        }
        return evaluate(alloc, s, users);
    }
    }
    throw std::invalid_argument("unknown scheme");
}

void SweepSpec::validate() const
{
    if (values.empty())
        throw std::invalid_argument("sweep: no axis values");
    if (!std::is_sorted(values.begin(), values.end()))
        throw std::invalid_argument("sweep: axis values must be ascending");
    if (trials < 1)
        throw std::invalid_argument("sweep: trials must be >= 1");
    if (schemes.empty())
        throw std::invalid_argument("sweep: no schemes selected");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const ScenarioConfig& base, const SolverConfig& cfg)
{
    spec.validate();
    base.validate();

    const std::size_t n_values = spec.values.size();
    const std::size_t n_schemes = spec.schemes.size();
    std::vector<SchemeOutcome> outcomes(n_values * spec.trials * n_schemes);

    parallel_for(n_values * spec.trials, spec.threads, [&](std::size_t task) {
        const std::size_t v = task / spec.trials;
        const std::size_t t = task % spec.trials;
        ScenarioConfig sc = base;
        if (spec.axis == SweepAxis::p_max_dbm)
            sc.p_max = spec.values[v];
        else
            sc.p_sta_0 = spec.values[v];
        sc.seed = base.seed + t;
        const Scenario scenario = generate(sc);
        for (std::size_t k = 0; k < n_schemes; ++k)
            outcomes[task * n_schemes + k] = run_scheme(spec.schemes[k], scenario, cfg);
    });

    std::vector<SweepRow> rows;
    for (std::size_t v = 0; v < n_values; ++v) {
        for (std::size_t k = 0; k < n_schemes; ++k) {
            SweepRow row;
            row.axis = spec.axis;
            row.value = spec.values[v];
            row.scheme = spec.schemes[k];
            row.trials = spec.trials;
            for (std::size_t t = 0; t < spec.trials; ++t) {
                const auto& o = outcomes[(v * spec.trials + t) * n_schemes + k];
                row.mean_ee += o.ee;
                row.mean_rate += o.rate;
                row.mean_users += static_cast<double>(o.scheduled_users);
                row.surrogate = row.surrogate || o.surrogate;
            }
            const auto n = static_cast<double>(spec.trials);
            row.mean_ee /= n;
            row.mean_rate /= n;
            row.mean_users /= n;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace eesched
