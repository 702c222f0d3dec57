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

// Monte-Carlo sweeps comparing the joint scheduler against baselines.

#include "eesched/ee_solver.hpp"
#include "eesched/scenario.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eesched {

enum class Scheme {
    ee_optimal,
    dinkelbach_global,
    ee_transmitter,
    ee_receiver,
    throughput_optimal,
};

enum class SweepAxis { p_max_dbm, p_sta_0_mw };

std::string_view to_string(Scheme s);
std::string_view to_string(SweepAxis a);
std::optional<Scheme> parse_scheme(std::string_view name);
/// Accepts the CSV names and the CLI short forms `pmax` / `psta0`.
std::optional<SweepAxis> parse_axis(std::string_view name);
/// Comma-separated scheme names; throws std::invalid_argument on an unknown one.
std::vector<Scheme> parse_scheme_list(std::string_view list);

const std::vector<Scheme>& all_schemes();
std::vector<double> default_axis_values(SweepAxis axis);

struct SchemeOutcome {
    double ee = 0.0;   ///< bit/J under the full power model
    double rate = 0.0; ///< bit/s
    std::size_t scheduled_users = 0;
    /// dinkelbach-global fell back to re-solving the scheduler's support.
    bool surrogate = false;
};

/// Runs one scheme on one scenario. Throws ConsistencyError if a solver
/// flags a support violation or fails to converge.
SchemeOutcome run_scheme(Scheme scheme, const Scenario& scenario, const SolverConfig& cfg = {});

struct SweepSpec {
    SweepAxis axis = SweepAxis::p_max_dbm;
    std::vector<double> values;
    std::size_t trials = 1;
    std::vector<Scheme> schemes;
    unsigned threads = 1;

    void validate() const;
};

struct SweepRow {
    SweepAxis axis = SweepAxis::p_max_dbm;
    double value = 0.0;
    Scheme scheme = Scheme::ee_optimal;
    double mean_ee = 0.0;
    double mean_rate = 0.0;
    double mean_users = 0.0;
    std::size_t trials = 0;
    bool surrogate = false;
};

/// Trial t of every axis point uses seed base.seed + t. Rows come out
/// value-major in the order of spec.schemes; results do not depend on
/// spec.threads.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const ScenarioConfig& base,
                                const SolverConfig& cfg = {});

inline constexpr std::string_view kCsvHeader =
    "axis,value,scheme,mean_ee_bit_per_joule,mean_rate_bps,mean_users,trials";

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

enum class ChartMetric { mean_ee, mean_users };

/// Standalone SVG line chart of one metric against the axis, one line per scheme.
void write_svg_chart(const std::vector<SweepRow>& rows, ChartMetric metric, std::ostream& out);
void write_svg_chart(const std::vector<SweepRow>& rows, ChartMetric metric,
                     const std::filesystem::path& path);

} // namespace eesched
