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

#include "eesched/types.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace eesched {

std::string to_string(const LinkKey& key)
{
    std::ostringstream os;
    os << "(user " << key.user.value << ", link " << key.link.value << ")";
    return os.str();
}

void SystemParams::validate() const
{
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    if (!(snr_gap >= 1.0))
        throw std::invalid_argument("SNR gap must be >= 1");
    if (!(noise_mw > 0.0))
        throw std::invalid_argument("noise variance must be positive");
    if (!(amplifier_efficiency > 0.0 && amplifier_efficiency <= 1.0))
        throw std::invalid_argument("amplifier efficiency must lie in (0, 1]");
}

const RadioLink& UserTerminal::link(LinkId link_id) const
{
    for (const auto& l : links) {
        if (l.id == link_id)
            return l;
    }
    throw std::invalid_argument("unknown link " + std::to_string(link_id.value) + " for user " +
                                std::to_string(id.value));
}

void validate_population(std::span<const UserTerminal> users, const AccessPoint& ap)
{
    if (!(ap.p_dyn_mw >= 0.0) || !(ap.p_sta_mw >= 0.0))
        throw std::invalid_argument("access point circuit powers must be nonnegative");

    std::set<UserId> user_ids;
    std::set<LinkId> link_ids;
    for (const auto& u : users) {
        if (!user_ids.insert(u.id).second)
            throw std::invalid_argument("duplicate user id " + std::to_string(u.id.value));
        if (!(u.weight >= 0.0) || !(u.p_dyn_mw >= 0.0) || !(u.p_sta_mw >= 0.0))
            throw std::invalid_argument("user " + std::to_string(u.id.value) +
                                        ": weight and circuit powers must be nonnegative");
        for (const auto& l : u.links) {
            if (!link_ids.insert(l.id).second)
                throw std::invalid_argument("link id " + std::to_string(l.id.value) +
                                            " assigned to more than one user");
            if (!(l.gain >= 0.0) || !(l.p_max_mw > 0.0) || !std::isfinite(l.gain))
                throw std::invalid_argument("link " + std::to_string(l.id.value) +
                                            ": gain must be >= 0 and p_max > 0");
        }
    }
}

const UserTerminal& find_user(std::span<const UserTerminal> users, UserId id)
{
    for (const auto& u : users) {
        if (u.id == id)
            return u;
    }
    throw std::invalid_argument("unknown user " + std::to_string(id.value));
}

void PowerAllocation::set(LinkKey key, double power_mw)
{
    powers_[key] = power_mw;
}

double PowerAllocation::at(LinkKey key) const
{
    auto it = powers_.find(key);
    return it == powers_.end() ? 0.0 : it->second;
}

void PowerAllocation::validate(std::span<const UserTerminal> users) const
{
    for (const auto& [key, p] : powers_) {
        const auto& link = find_user(users, key.user).link(key.link);
        if (!(p >= 0.0 && p <= link.p_max_mw))
            throw std::invalid_argument("power " + std::to_string(p) + " mW on " + to_string(key) +
                                        " outside [0, p_max]");
    }
}

} // namespace eesched
