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

#pragma once

// Test-only instance builders. Channel quality is expressed as
// a = g / (Gamma sigma^2) in 1/mW and converted to a gain here.

#include "eesched/types.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace eesched::testing {

inline constexpr double kNoiseMw = 5.971607558302478e-14; // -174 dBm/Hz over 15 kHz
inline constexpr double kPmax25dBm = 316.22776601683793;

inline SystemParams reference_params()
{
    return {15000.0, 1.0, kNoiseMw, 0.38};
}

inline UserTerminal make_user(std::uint32_t id, std::vector<double> snr_per_mw, double p_dyn = 30.0,
                              double p_sta = 100.0, double weight = 1.0, std::uint32_t first_link = 0,
                              double p_max = kPmax25dBm)
{
    UserTerminal u;
    u.id = UserId{id};
    u.weight = weight;
    u.p_dyn_mw = p_dyn;
    u.p_sta_mw = p_sta;
    for (std::size_t i = 0; i < snr_per_mw.size(); ++i)
        u.links.push_back({LinkId{first_link + static_cast<std::uint32_t>(i)}, snr_per_mw[i] * kNoiseMw, p_max});
    return u;
}

struct Instance {
    std::vector<UserTerminal> users;
    AccessPoint ap{45.0, 5000.0};
    SystemParams params = reference_params();

    std::size_t link_count() const
    {
        std::size_t n = 0;
        for (const auto& u : users)
            n += u.links.size();
        return n;
    }
};

/// K in [1, max_users], 1..max_links links each, log-uniform a over six
/// decades (1e-4 .. 1e2 per mW), P_dyn,k ~ U[5, 30], a random AP static power
/// and, for odd seeds, random user weights.
inline Instance random_instance(std::uint64_t seed, int max_users = 3, int max_links = 3)
{
    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    auto integer = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    Instance inst;
    static constexpr double kApStatic[] = {0.0, 10.0, 100.0, 1000.0, 5000.0, 20000.0};
    inst.ap.p_sta_mw = kApStatic[integer(0, 5)];

    const int users = integer(1, max_users);
    std::uint32_t link_id = 0;
    for (int k = 0; k < users; ++k) {
        const int links = integer(1, max_links);
        std::vector<double> snr;
        for (int i = 0; i < links; ++i)
            snr.push_back(std::pow(10.0, uniform(-4.0, 2.0)));
        const double weight = seed % 2 ? uniform(0.5, 2.0) : 1.0;
        inst.users.push_back(make_user(static_cast<std::uint32_t>(k), snr, uniform(5.0, 30.0), 100.0, weight,
                                       link_id));
        link_id += static_cast<std::uint32_t>(links);
    }
    return inst;
}

inline double relative_gap(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

} // namespace eesched::testing
