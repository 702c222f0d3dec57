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

#include "eesched/scheduler.hpp"

#include "eesched/parallel.hpp"
#include "eesched/power_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eesched {

std::vector<ScheduleUnit> build_units(std::span<const UserEeResult> per_user,
                                      std::span<const UserTerminal> users)
{
    std::vector<ScheduleUnit> units;
    for (const auto& r : per_user) {
        const auto& user = find_user(users, r.user);
        if (!r.active.empty())
            units.push_back({UnitKind::real, r.user, r.active, r.solution.ee, user.p_sta_mw});
        for (const auto& link : r.rejected) {
            if (link.ee > 0.0)
                units.push_back({UnitKind::virtual_user, r.user, ActiveLinkSet{link.key}, link.ee, 0.0});
        }
    }
    std::stable_sort(units.begin(), units.end(), [](const ScheduleUnit& a, const ScheduleUnit& b) {
        if (a.ee != b.ee)
            return a.ee > b.ee;
        if (a.kind != b.kind)
            return a.kind == UnitKind::real;
        return a.links.entries().front() < b.links.entries().front();
    });
    return units;
}

ScheduleResult schedule(std::span<const UserTerminal> users,
                        const AccessPoint& ap,
                        const SystemParams& params,
                        const SolverConfig& cfg,
                        const ScheduleOptions& opts)
{
    params.validate();
    cfg.validate();
    validate_population(users, ap);

    ScheduleResult out;
    out.per_user.resize(users.size());
    parallel_for(users.size(), opts.threads, [&](std::size_t i) {
        if (!users[i].links.empty())
            out.per_user[i] = solve_user_ee(users[i], ap, params, cfg);
        else
            out.per_user[i].user = users[i].id;
    });
    for (const auto& r : out.per_user) {
        out.user_scope_solves += r.admissions.size();
        out.converged = out.converged && r.solution.converged;
    }

    out.units = build_units(out.per_user, users);
    if (out.units.empty())
        throw std::invalid_argument("schedule: no user has a link with positive gain");

    double ee = 0.0;
    EeSolution current;
    for (const auto& unit : out.units) {
        if (!(ee <= unit.ee))
            break;
        if (unit.kind == UnitKind::virtual_user && !out.scheduled_users.contains(unit.source))
            throw ConsistencyError("virtual unit for " + to_string(unit.links.entries().front()) +
                                   " admitted before its user was scheduled");
        for (const auto& key : unit.links)
            out.active_links.insert(key);
        out.scheduled_users.insert(unit.source);

        current = solve_active_set_ee(out.active_links, users, params,
                                      circuit_charge(out.active_links, users, ap, ChargeScope::system), cfg);
        ++out.system_scope_solves;
        out.admissions.push_back({unit, ee, current.ee});
        ee = current.ee;
    }

    out.allocation = current.powers;
    out.objective_ee = current.ee;
    out.converged = out.converged && current.converged;
    out.support_ok = current.support_ok;
    out.rate = system_rate(out.allocation, users, params);
    out.power = total_power(out.allocation, users, ap, params);
    out.ee = system_ee(out.allocation, users, ap, params);
    return out;
}

} // namespace eesched
