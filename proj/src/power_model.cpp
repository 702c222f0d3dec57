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

#include "eesched/power_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eesched {

int indicator(double x)
{
    return x > 0.0 ? 1 : 0;
}

double link_rate(double p_mw, const RadioLink& link, const SystemParams& params)
{
    if (!(p_mw >= 0.0 && p_mw <= link.p_max_mw))
        throw std::domain_error("link_rate: power " + std::to_string(p_mw) + " mW outside [0, " +
                                std::to_string(link.p_max_mw) + "]");
    if (p_mw == 0.0 || link.gain == 0.0)
        return 0.0;
    return params.bandwidth_hz * std::log2(1.0 + p_mw * link.gain / params.noise_floor_mw());
}

double system_rate(const PowerAllocation& alloc,
                   std::span<const UserTerminal> users,
                   const SystemParams& params)
{
    alloc.validate(users);
    double total = 0.0;
    for (const auto& u : users) {
        double user_rate = 0.0;
        for (const auto& l : u.links)
            user_rate += link_rate(alloc.at({u.id, l.id}), l, params);
        total += u.weight * user_rate;
    }
    return total;
}

PowerBreakdown total_power(const PowerAllocation& alloc,
                           std::span<const UserTerminal> users,
                           const AccessPoint& ap,
                           const SystemParams& params)
{
    alloc.validate(users);
    PowerBreakdown out;
    for (const auto& u : users) {
        int active_links = 0;
        double tx = 0.0;
        for (const auto& l : u.links) {
            const double p = alloc.at({u.id, l.id});
            tx += p;
            active_links += indicator(p);
        }
        out.transmit += tx / params.amplifier_efficiency;
        out.user_dynamic += active_links * u.p_dyn_mw;
        out.user_static += indicator(active_links) * u.p_sta_mw;
        out.ap_dynamic += active_links * ap.p_dyn_mw;
    }
    out.ap_static = ap.p_sta_mw;
    out.total = out.transmit + out.user_dynamic + out.user_static + out.ap_dynamic + out.ap_static;
    return out;
}

double system_ee(const PowerAllocation& alloc,
                 std::span<const UserTerminal> users,
                 const AccessPoint& ap,
                 const SystemParams& params)
{
    const double power_mw = total_power(alloc, users, ap, params).total;
    if (power_mw <= 0.0)
        return 0.0;
    return to_bit_per_joule(system_rate(alloc, users, params) / power_mw);
}

} // namespace eesched
