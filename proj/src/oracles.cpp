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

#include "eesched/oracles.hpp"

#include "eesched/power_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace eesched {

OracleResult global_oracle(std::span<const UserTerminal> users,
                           const AccessPoint& ap,
                           const SystemParams& params,
                           const SolverConfig& cfg)
{
    params.validate();
    validate_population(users, ap);

    std::vector<LinkKey> keys;
    std::vector<bool> usable;
    for (const auto& u : users) {
        for (const auto& l : u.links) {
            keys.push_back({u.id, l.id});
            usable.push_back(l.gain > 0.0);
        }
    }
    if (keys.size() > kMaxOracleLinks)
        throw std::length_error("global_oracle: " + std::to_string(keys.size()) +
                                " links exceeds the enumeration limit of " +
                                std::to_string(kMaxOracleLinks));

    OracleResult best;
    double best_objective = 0.0;
    const std::uint32_t subsets = 1u << keys.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        ++best.subsets_examined;
        if (mask == 0)
            continue;
        ActiveLinkSet active;
        bool feasible = true;
        for (std::size_t j = 0; j < keys.size(); ++j) {
            if (mask & (1u << j)) {
                feasible = feasible && usable[j];
                active.insert(keys[j]);
            }
        }
        if (!feasible)
            continue;
        const auto sol = solve_active_set_ee(active, users, params,
                                             circuit_charge(active, users, ap, ChargeScope::system), cfg);
        // A clipped member means this subset's circuit accounting is wrong;
        // the subset without it covers that case.
        if (!sol.support_ok)
            continue;
        if (sol.ee > best_objective) {
            best_objective = sol.ee;
            best.allocation = sol.powers;
            best.active_set = active;
        }
    }
    best.ee = system_ee(best.allocation, users, ap, params);
    return best;
}

GridResult grid_oracle_1d(const RadioLink& link,
                          const UserTerminal& user,
                          const AccessPoint& ap,
                          const SystemParams& params,
                          std::size_t steps)
{
    if (steps < 1000)
        throw std::invalid_argument("grid_oracle_1d: need at least 1000 steps");
    if (link.gain == 0.0)
        return {};

    const double circuit = user.p_dyn_mw + ap.p_dyn_mw;
    auto ratio = [&](double p) {
        const double d = p / params.amplifier_efficiency + circuit;
        return d > 0.0 ? to_bit_per_joule(user.weight * link_rate(p, link, params) / d) : 0.0;
    };

    const double h = link.p_max_mw / static_cast<double>(steps);
    std::size_t best_j = 0;
    double best = ratio(0.0);
    for (std::size_t j = 1; j <= steps; ++j) {
        const double v = ratio(j == steps ? link.p_max_mw : h * static_cast<double>(j));
        if (v > best) {
            best = v;
            best_j = j;
        }
    }

    double a = best_j == 0 ? 0.0 : h * static_cast<double>(best_j - 1);
    double b = std::min(link.p_max_mw, h * static_cast<double>(best_j + 1));
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = ratio(c);
    double fd = ratio(d);
    for (int it = 0; it < 200 && b - a > 1e-15 * link.p_max_mw; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = ratio(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = ratio(d);
        }
    }

    GridResult out{best, best_j == steps ? link.p_max_mw : h * static_cast<double>(best_j)};
    for (double p : {c, d}) {
        const double v = ratio(p);
        if (v > out.ee)
            out = {v, p};
    }
    return out;
}

} // namespace eesched
