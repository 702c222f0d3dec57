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

// Command-line front end. Talks to the library only through the C API.

#include "eesched/eesched.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliError {
    eesched_status status;
    std::string message;
};

void check(eesched_status status, const std::string& what)
{
    if (status != EESCHED_OK)
        throw CliError{status, what + ": " + eesched_last_error()};
}

struct ConfigDeleter {
    void operator()(eesched_config* c) const { eesched_config_free(c); }
};
struct ScenarioDeleter {
    void operator()(eesched_scenario* s) const { eesched_scenario_free(s); }
};
struct SweepDeleter {
    void operator()(eesched_sweep* s) const { eesched_sweep_free(s); }
};
using ConfigPtr = std::unique_ptr<eesched_config, ConfigDeleter>;
using ScenarioPtr = std::unique_ptr<eesched_scenario, ScenarioDeleter>;
using SweepPtr = std::unique_ptr<eesched_sweep, SweepDeleter>;

struct CommonOptions {
    std::string config_path;
    std::optional<unsigned long long> seed;
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--config", opts.config_path, "Scenario config file (key = value)")->check(CLI::ExistingFile);
    cmd->add_option("--seed", opts.seed, "Base random seed");
}

// Defaults are applied first so the config file and --seed can override them.
ConfigPtr make_config(const CommonOptions& opts,
                      const std::vector<std::pair<std::string, std::string>>& defaults = {})
{
    eesched_config* raw = nullptr;
    check(eesched_config_new(&raw), "config");
    ConfigPtr cfg(raw);
    for (const auto& [k, v] : defaults)
        check(eesched_config_set(cfg.get(), k.c_str(), v.c_str()), "config " + k);
    if (!opts.config_path.empty())
        check(eesched_config_load(cfg.get(), opts.config_path.c_str()), "config file");
    if (opts.seed)
        check(eesched_config_set(cfg.get(), "seed", std::to_string(*opts.seed).c_str()), "seed");
    return cfg;
}

std::string config_value(const eesched_config* cfg, const char* key)
{
    char buf[128];
    check(eesched_config_get(cfg, key, buf, sizeof buf, nullptr), std::string("config ") + key);
    return buf;
}

ScenarioPtr make_scenario(const eesched_config* cfg)
{
    eesched_scenario* raw = nullptr;
    check(eesched_scenario_generate(cfg, &raw), "scenario");
    return ScenarioPtr(raw);
}

std::vector<eesched_scheme> parse_schemes(const std::string& list)
{
    std::vector<eesched_scheme> out;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty())
            continue;
        eesched_scheme s{};
        check(eesched_scheme_from_name(name.c_str(), &s), "--schemes");
        out.push_back(s);
    }
    if (out.empty())
        throw CliError{EESCHED_ERR_INVALID_ARGUMENT, "--schemes: empty list"};
    return out;
}

int run_sweep(const CommonOptions& common, const std::string& axis_name, std::size_t trials,
              const std::string& out_dir, const std::string& schemes_list, const std::string& format,
              const std::string& metric, const std::vector<double>& user_values, unsigned threads)
{
    auto cfg = make_config(common);
    eesched_axis axis{};
    check(eesched_axis_from_name(axis_name.c_str(), &axis), "--axis");
    std::vector<double> values = user_values;
    if (values.empty()) {
        std::size_t n = 0;
        check(eesched_axis_default_values(axis, nullptr, 0, &n), "axis values");
        values.resize(n);
        check(eesched_axis_default_values(axis, values.data(), n, &n), "axis values");
    }
    const auto schemes = parse_schemes(schemes_list);

    eesched_sweep* raw = nullptr;
    check(eesched_sweep_run(cfg.get(), axis, values.data(), values.size(), trials, schemes.data(), schemes.size(),
                            threads, &raw),
          "sweep");
    SweepPtr sweep(raw);

    for (std::size_t i = 0; i < eesched_sweep_row_count(sweep.get()); ++i) {
        eesched_sweep_row row{};
        check(eesched_sweep_row_get(sweep.get(), i, &row), "sweep row");
        if (row.surrogate)
            std::fprintf(stderr, "warning: %s at %g used the support re-solve surrogate (instance too large)\n",
                         eesched_scheme_name(row.scheme), row.value);
    }

    std::filesystem::create_directories(out_dir);
    const std::string stem = axis == EESCHED_AXIS_P_MAX_DBM ? "sweep_pmax" : "sweep_psta0";
    std::filesystem::path path = std::filesystem::path(out_dir) / stem;
    if (format == "csv") {
        path += ".csv";
        check(eesched_sweep_write(sweep.get(), EESCHED_FORMAT_CSV, path.string().c_str()), "write");
    } else {
        const bool users = metric == "users" || (metric.empty() && axis == EESCHED_AXIS_P_STA_0_MW);
        path += users ? "_users.svg" : "_ee.svg";
        check(eesched_sweep_write(sweep.get(), users ? EESCHED_FORMAT_CHART_USERS : EESCHED_FORMAT_CHART_EE,
                                  path.string().c_str()),
              "write");
    }
    std::printf("%s\n", path.string().c_str());
    return 0;
}

int run_solve(const CommonOptions& common, const std::string& schemes_list)
{
    auto cfg = make_config(common);
    auto scenario = make_scenario(cfg.get());

    eesched_schedule_summary sum{};
    check(eesched_schedule_summary_get(scenario.get(), &sum), "schedule");
    std::printf("seed                 %s\n", config_value(cfg.get(), "seed").c_str());
    std::printf("system EE            %.9g bit/J\n", sum.ee_bit_per_joule);
    std::printf("weighted rate        %.9g bit/s\n", sum.rate_bps);
    std::printf("scheduled users      %zu\n", sum.scheduled_users);
    std::printf("active links         %zu\n", sum.active_links);
    std::printf("units admitted       %zu of %zu\n", sum.admitted_units, sum.units);
    std::printf("fixed-set solves     %zu user + %zu system\n", sum.user_scope_solves, sum.system_scope_solves);
    std::printf("power (mW)           transmit %.6g, user dyn %.6g, user sta %.6g, ap dyn %.6g, ap sta %.6g, "
                "total %.6g\n",
                sum.transmit_mw, sum.user_dynamic_mw, sum.user_static_mw, sum.ap_dynamic_mw, sum.ap_static_mw,
                sum.total_mw);

    if (!schemes_list.empty()) {
        std::printf("\n%-20s %16s %16s %6s\n", "scheme", "EE (bit/J)", "rate (bit/s)", "users");
        for (auto s : parse_schemes(schemes_list)) {
            eesched_outcome o{};
            check(eesched_solve(scenario.get(), s, &o), eesched_scheme_name(s));
            std::printf("%-20s %16.9g %16.9g %6zu%s\n", eesched_scheme_name(s), o.ee_bit_per_joule, o.rate_bps,
                        o.scheduled_users, o.surrogate ? "  (surrogate)" : "");
        }
    }
    return 0;
}

int run_oracle_check(const CommonOptions& common, std::size_t trials, double tolerance)
{
    auto cfg = make_config(common, {{"num_users", "3"}, {"links_per_user", "3"}});
    const unsigned long long base_seed = std::stoull(config_value(cfg.get(), "seed"));
    int failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto seed = std::to_string(base_seed + t);
        check(eesched_config_set(cfg.get(), "seed", seed.c_str()), "seed");
        auto scenario = make_scenario(cfg.get());
        eesched_oracle_report rep{};
        check(eesched_oracle_check(scenario.get(), &rep), "oracle");
        const bool ok = rep.relative_gap <= tolerance;
        failures += ok ? 0 : 1;
        std::printf("seed %-8s scheduler %.12g  oracle %.12g  gap %.3e  subsets %zu  %s\n", seed.c_str(),
                    rep.scheduler_ee, rep.oracle_ee, rep.relative_gap, rep.subsets_examined, ok ? "ok" : "MISMATCH");
    }
    std::printf("%zu trials, %d mismatches\n", trials, failures);
    return failures == 0 ? 0 : 1;
}

int run_gen_scenario(const CommonOptions& common, const std::string& out_dir)
{
    auto cfg = make_config(common);
    auto scenario = make_scenario(cfg.get());
    std::filesystem::create_directories(out_dir);
    const auto path =
        (std::filesystem::path(out_dir) / ("scenario_seed" + config_value(cfg.get(), "seed") + ".csv")).string();
    check(eesched_scenario_write_csv(scenario.get(), path.c_str()), "write");
    std::size_t users = 0, links = 0;
    check(eesched_scenario_counts(scenario.get(), &users, &links), "counts");
    std::printf("%s (%zu users, %zu links)\n", path.c_str(), users, links);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy-efficient joint Tx/Rx scheduling for multi-radio uplinks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(eesched_version()));

    CommonOptions sweep_common, solve_common, oracle_common, gen_common;

    auto* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep of the compared schemes");
    add_common(sweep, sweep_common);
    std::string axis = "pmax", out_dir = ".", schemes = "ee-optimal,dinkelbach-global,ee-transmitter,ee-receiver,throughput-optimal";
    std::string format = "csv", metric;
    std::size_t trials = 50;
    unsigned threads = 1;
    std::vector<double> values;
    sweep->add_option("--axis", axis, "Swept quantity")->check(CLI::IsMember({"pmax", "psta0"}));
    sweep->add_option("--trials", trials, "Scenarios per axis point")->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_dir, "Output directory");
    sweep->add_option("--schemes", schemes, "Comma-separated scheme list");
    sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "chart"}));
    sweep->add_option("--metric", metric, "Chart metric (default: ee for pmax, users for psta0)")
        ->check(CLI::IsMember({"ee", "users"}));
    sweep->add_option("--values", values, "Axis values (default grid if omitted)")->delimiter(',');
    sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* solve = app.add_subcommand("solve", "Schedule one scenario and print the result");
    add_common(solve, solve_common);
    std::string solve_schemes;
    solve->add_option("--schemes", solve_schemes, "Also evaluate these schemes");

    auto* oracle = app.add_subcommand("oracle-check", "Compare the scheduler with exhaustive enumeration");
    add_common(oracle, oracle_common);
    std::size_t oracle_trials = 20;
    double tolerance = 1e-6;
    oracle->add_option("--trials", oracle_trials, "Number of seeds")->check(CLI::PositiveNumber);
    oracle->add_option("--tolerance", tolerance, "Allowed relative EE gap");

    auto* gen = app.add_subcommand("gen-scenario", "Write a scenario's channel gains to CSV");
    add_common(gen, gen_common);
    std::string gen_out = ".";
    gen->add_option("--out", gen_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep)
            return run_sweep(sweep_common, axis, trials, out_dir, schemes, format, metric, values, threads);
        if (*solve)
            return run_solve(solve_common, solve_schemes);
        if (*oracle)
            return run_oracle_check(oracle_common, oracle_trials, tolerance);
        if (*gen)
            return run_gen_scenario(gen_common, gen_out);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.status == EESCHED_ERR_CONSISTENCY ? 3 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
