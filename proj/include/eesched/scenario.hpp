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

// Reproducible single-cell uplink scenarios: user placement, COST-231 Hata
// path loss, log-normal shadowing, Rayleigh fading and circuit-power draws.

#include "eesched/types.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace eesched {

struct ScenarioConfig {
    std::size_t num_users = 8;
    std::size_t links_per_user = 20;
    double cell_radius = 1000.0;          // m
    double carrier_freq = 2.0;            // GHz
    double bandwidth = 15000.0;           // Hz
    double noise_density = -174.0;        // dBm/Hz
    double p_max = 25.0;                  // dBm
    double xi = 0.38;
    double p_sta_0 = 5000.0;              // mW
    double p_dyn_0 = 45.0;                // mW
    double p_sta_k = 100.0;               // mW
    std::array<double, 2> p_dyn_k_range{5.0, 30.0}; // mW
    double penetration_loss = 20.0;       // dB
    double shadowing_std = 8.0;           // dB
    double snr_gap = 1.0;
    std::uint64_t seed = 1;
    double min_distance = 50.0;           // m
    double bs_height = 30.0;              // m
    double ms_height = 1.5;               // m
    double weight = 1.0;

    void validate() const;
};

/// Config keys in canonical order.
const std::vector<std::string>& scenario_config_keys();

/// Sets one field from its text form. Throws std::invalid_argument on an
/// unknown key or malformed value.
void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value);
std::string get_config_value(const ScenarioConfig& cfg, std::string_view key);

/// Flat `key = value` text, `#` comments. Keys not named in the file keep
/// their current values.
void load_scenario_config(ScenarioConfig& cfg, std::istream& in);
void load_scenario_config(ScenarioConfig& cfg, const std::filesystem::path& path);

struct UserPlacement {
    double distance_m = 0.0;
    double shadowing_db = 0.0;
    double path_loss_db = 0.0;
};

struct Scenario {
    std::vector<UserTerminal> users;
    AccessPoint ap;
    SystemParams params;
    std::vector<UserPlacement> placement;
};

/// COST-231 Hata urban (medium city) path loss in dB.
double cost231_hata_db(double freq_mhz, double bs_height_m, double ms_height_m, double distance_km);

double dbm_to_mw(double dbm);

/// Draw order, from one mt19937_64 seeded with cfg.seed, user by user:
///   distance (uniform over the annulus area), shadowing (normal, dB),
///   P_dyn (uniform over the range), then one Exp(1) fading power per link.
/// User k gets id k; its link i gets id k * links_per_user + i.
Scenario generate(const ScenarioConfig& cfg);

/// CSV with header `user_id,link_id,gain,p_dyn_k`.
void write_scenario_csv(const Scenario& scenario, std::ostream& out);
void write_scenario_csv(const Scenario& scenario, const std::filesystem::path& path);

} // namespace eesched
