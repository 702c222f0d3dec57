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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: eesched_acceptance <path to eesched CLI>

#include "eesched/experiments.hpp"
#include "eesched/oracles.hpp"
#include "eesched/power_model.hpp"
#include "eesched/scenario.hpp"
#include "eesched/scheduler.hpp"
#include "support/instances.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace eesched;
using namespace eesched::testing;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& name, const std::string& detail)
{
    std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Run {
    Instance inst;
    ScheduleResult sched;
    OracleResult oracle;
};

// Criterion-1 instances, shared by criteria 2, 3 and 8.
std::vector<Run> optimality_runs(double& elapsed)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Run> runs;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Run r;
        r.inst = random_instance(seed, 3, 3);
        r.sched = schedule(r.inst.users, r.inst.ap, r.inst.params);
        r.oracle = global_oracle(r.inst.users, r.inst.ap, r.inst.params);
        runs.push_back(std::move(r));
    }
    elapsed = seconds_since(t0);
    return runs;
}

void criterion_optimality(const std::vector<Run>& runs, double elapsed)
{
    double worst = 0.0;
    std::size_t users_seen[4] = {0, 0, 0, 0};
    for (const auto& r : runs) {
        worst = std::max(worst, relative_gap(r.sched.ee, r.oracle.ee));
        ++users_seen[r.inst.users.size()];
    }
    report(1, worst <= 1e-6 && elapsed <= 60.0, "scheduler matches exhaustive oracle",
           fmt("%zu instances (K=1/2/3: %zu/%zu/%zu), max relative gap %.2e, %.2f s", runs.size(), users_seen[1],
               users_seen[2], users_seen[3], worst, elapsed));
}

void criterion_sandwich(const std::vector<Run>& runs)
{
    constexpr double tol = 1e-8;
    std::size_t steps = 0, bad = 0;
    auto check = [&](double before, double unit, double after) {
        ++steps;
        const double lo = std::min(before, unit), hi = std::max(before, unit);
        if (after < lo - tol * lo || after > hi + tol * hi)
            ++bad;
    };
    for (const auto& r : runs) {
        for (const auto& pu : r.sched.per_user)
            for (const auto& a : pu.admissions)
                check(a.ee_before, a.link.ee, a.ee_after);
        for (const auto& a : r.sched.admissions)
            check(a.ee_before, a.unit.ee, a.ee_after);
    }
    report(2, bad == 0 && steps > 0, "admission steps stay within the sandwich bounds",
           fmt("%zu user- and system-level steps, %zu violations", steps, bad));
}

// Checks one optimum of the ratio `ee_of` over the given keys.
template <class F>
void check_stationary(const PowerAllocation& alloc, std::span<const UserTerminal> users, F&& ee_of,
                      std::size_t& interior, std::size_t& clipped, std::size_t& bad, double& worst)
{
    const double ee = ee_of(alloc);
    for (const auto& [key, p] : alloc) {
        const auto& link = find_user(users, key.user).link(key.link);
        auto at = [&](double x) {
            auto a = alloc;
            a.set(key, x);
            return ee_of(a);
        };
        if (p < link.p_max_mw) {
            ++interior;
            const double h = 1e-5 * p;
            const double slope = (at(p + h) - at(p - h)) / (2 * h);
            const double rel = std::abs(slope) * p / ee;
            worst = std::max(worst, rel);
            if (rel > 1e-6)
                ++bad;
        } else {
            ++clipped;
            // Clipped at p_max: the ratio must still be rising from the left.
            const double h = 1e-5 * p;
            if (ee - at(p - h) < -1e-12 * ee)
                ++bad;
        }
    }
}

void criterion_stationarity(const std::vector<Run>& runs)
{
    std::size_t interior = 0, clipped = 0, bad = 0;
    double worst = 0.0;
    for (const auto& r : runs) {
        const auto& inst = r.inst;
        check_stationary(
            r.sched.allocation, inst.users,
            [&](const PowerAllocation& a) { return system_ee(a, inst.users, inst.ap, inst.params); }, interior,
            clipped, bad, worst);
        for (const auto& pu : r.sched.per_user) {
            if (pu.active.empty())
                continue;
            const std::vector<UserTerminal> one{find_user(inst.users, pu.user)};
            const AccessPoint user_scope{inst.ap.p_dyn_mw, 0.0};
            check_stationary(
                pu.solution.powers, one,
                [&](const PowerAllocation& a) { return system_ee(a, one, user_scope, inst.params); }, interior,
                clipped, bad, worst);
        }
    }
    report(3, bad == 0 && interior > 0, "optimal powers are stationary or clipped in the right direction",
           fmt("%zu interior (max relative slope %.2e), %zu at p_max, %zu violations", interior, worst, clipped,
               bad));
}

void criterion_tdma()
{
    ScenarioConfig cfg;
    cfg.p_sta_0 = 0.0;
    std::size_t ok = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        cfg.seed = seed;
        const auto sc = generate(cfg);
        const auto r = schedule(sc.users, sc.ap, sc.params);
        ok += r.scheduled_users.size() == 1 ? 1 : 0;
    }
    report(4, ok == 50, "zero AP static power schedules a single user",
           fmt("%zu of 50 scenarios (8 users x 20 links) scheduled exactly one user", ok));
}

void criterion_user_growth()
{
    ScenarioConfig cfg;
    const auto grid = default_axis_values(SweepAxis::p_sta_0_mw);
    std::size_t monotone = 0, full = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        cfg.seed = seed;
        auto sc = generate(cfg);
        std::size_t prev = 0;
        bool mono = true;
        for (double p : grid) {
            sc.ap.p_sta_mw = p;
            const auto n = schedule(sc.users, sc.ap, sc.params).scheduled_users.size();
            mono = mono && n >= prev;
            prev = n;
        }
        monotone += mono ? 1 : 0;
        full += prev == cfg.num_users ? 1 : 0;
    }
    report(5, monotone == 50 && full * 100 >= 95 * 50, "scheduled users grow with AP static power",
           fmt("nondecreasing on %zu of 50 seeds; all 8 users at 1e6 mW on %zu of 50 (need >= 48)", monotone, full));
}

void criterion_pmax_shape()
{
    SweepSpec spec;
    spec.axis = SweepAxis::p_max_dbm;
    spec.values = default_axis_values(SweepAxis::p_max_dbm);
    spec.trials = 50;
    spec.schemes = {Scheme::ee_optimal, Scheme::throughput_optimal};
    spec.threads = 4;
    const auto rows = run_sweep(spec, ScenarioConfig{});

    std::vector<double> opt, thr;
    for (const auto& r : rows)
        (r.scheme == Scheme::ee_optimal ? opt : thr).push_back(r.mean_ee);

    // Solver tolerance allows equal points to differ in the last digits.
    bool nondecreasing = true;
    for (std::size_t i = 1; i < opt.size(); ++i)
        nondecreasing = nondecreasing && opt[i] >= opt[i - 1] * (1 - 1e-9);
    const auto at = [&](double dbm) {
        return opt[std::find(spec.values.begin(), spec.values.end(), dbm) - spec.values.begin()];
    };
    const double flat = std::abs(at(45.0) - at(35.0)) / at(35.0);
    const auto peak = std::max_element(thr.begin(), thr.end()) - thr.begin();
    const bool interior = peak > 0 && peak + 1 < static_cast<long>(thr.size()) && thr.front() < thr[peak] &&
                          thr.back() < thr[peak];
    report(6, nondecreasing && flat < 0.01 && interior, "EE against p_max rises then saturates",
           fmt("ee-optimal nondecreasing: %s, 35->45 dBm change %.2e; throughput-optimal peak at %g dBm",
               nondecreasing ? "yes" : "no", flat, spec.values[peak]));
}

void criterion_transmitter_baseline()
{
    ScenarioConfig cfg;
    std::size_t ok = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        cfg.seed = seed;
        ok += run_scheme(Scheme::ee_transmitter, generate(cfg)).scheduled_users == 1 ? 1 : 0;
    }
    report(7, ok == 50, "transmitter-side baseline schedules one user",
           fmt("%zu of 50 default scenarios", ok));
}

void criterion_linear_solves(const std::vector<Run>& runs)
{
    std::size_t over = 0, solves = 0, budget = 0;
    for (const auto& r : runs) {
        const std::size_t s = r.sched.user_scope_solves + r.sched.system_scope_solves;
        const std::size_t b = r.inst.link_count() + r.sched.units.size();
        std::size_t logged = r.sched.admissions.size();
        for (const auto& pu : r.sched.per_user)
            logged += pu.admissions.size();
        over += (s > b || logged != s) ? 1 : 0;
        solves += s;
        budget += b;
    }
    report(8, over == 0, "fixed-set solves stay within links + units",
           fmt("%zu solves against a budget of %zu over %zu instances, %zu over budget", solves, budget, runs.size(),
               over));
}

void criterion_cross_validation()
{
    SolverConfig bis;
    bis.method = RootFinder::bisection;
    double worst_bis = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto inst = random_instance(100000 + seed, 1, 1);
        const auto& u = inst.users[0];
        const auto a = solve_link_ee(u.links[0], u, inst.ap, inst.params);
        const auto b = solve_link_ee(u.links[0], u, inst.ap, inst.params, bis);
        worst_bis = std::max(worst_bis, relative_gap(a.ee, b.ee));
    }
    double worst_grid = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto inst = random_instance(200000 + seed, 1, 1);
        const auto& u = inst.users[0];
        const auto a = solve_link_ee(u.links[0], u, inst.ap, inst.params);
        const auto g = grid_oracle_1d(u.links[0], u, inst.ap, inst.params, 10000);
        worst_grid = std::max(worst_grid, relative_gap(a.ee, g.ee));
    }
    report(9, worst_bis <= 1e-7 && worst_grid <= 1e-5, "link solvers agree",
           fmt("Dinkelbach vs bisection max gap %.2e over 1000 links; vs grid search %.2e over 100", worst_bis,
               worst_grid));
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion_determinism(const char* cli)
{
    const auto root = std::filesystem::temp_directory_path() / "eesched_acceptance_determinism";
    std::filesystem::remove_all(root);
    std::vector<std::string> outputs;
    int bad_exit = 0;
    const char* runs[][2] = {{"a", "1"}, {"b", "1"}, {"c", "4"}};
    for (const auto& [name, threads] : runs) {
        const auto dir = root / name;
        const std::string cmd = std::string("\"") + cli + "\" sweep --seed 17 --trials 5 --threads " + threads +
                                " --out \"" + dir.string() + "\" > /dev/null 2>&1";
        bad_exit += std::system(cmd.c_str()) != 0 ? 1 : 0;
        outputs.push_back(slurp(dir / "sweep_pmax.csv"));
    }
    const bool same = !outputs[0].empty() && outputs[0] == outputs[1] && outputs[0] == outputs[2];
    report(10, bad_exit == 0 && same, "sweep CSV is byte-identical across runs and thread counts",
           fmt("3 runs (threads 1, 1, 4), %zu bytes each, %d failed invocations, identical: %s",
               outputs[0].size(), bad_exit, same ? "yes" : "no"));
    std::filesystem::remove_all(root);
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <path to eesched>\n", argv[0]);
        return 2;
    }
    try {
        double elapsed = 0.0;
        const auto runs = optimality_runs(elapsed);
        criterion_optimality(runs, elapsed);
        criterion_sandwich(runs);
        criterion_stationarity(runs);
        criterion_tdma();
        criterion_user_growth();
        criterion_pmax_shape();
        criterion_transmitter_baseline();
        criterion_linear_solves(runs);
        criterion_cross_validation();
        criterion_determinism(argv[1]);
    } catch (const std::exception& e) {
        std::printf("FAIL acceptance aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
