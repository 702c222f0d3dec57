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
#include "eesched/scenario.hpp"
#include "eesched/scheduler.hpp"
#include "support/instances.hpp"

#include <doctest.h>

using namespace eesched;
using namespace eesched::testing;

TEST_CASE("global oracle on one link equals the scheduler")
{
    const std::vector<UserTerminal> users{make_user(0, {0.05})};
    const AccessPoint ap{45.0, 5000.0};
    const auto o = global_oracle(users, ap, reference_params());
    const auto s = schedule(users, ap, reference_params());
    CHECK(o.subsets_examined == 2);
    CHECK(o.ee == s.ee);
    CHECK(o.allocation == s.allocation);
}

TEST_CASE("global oracle matches the scheduler on random instances")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto inst = random_instance(seed, 3, 3);
        const auto o = global_oracle(inst.users, inst.ap, inst.params);
        const auto s = schedule(inst.users, inst.ap, inst.params);
        INFO("seed " << seed);
        CHECK(relative_gap(o.ee, s.ee) < 1e-6);
        CHECK(o.subsets_examined == (std::size_t{1} << inst.link_count()));
    }
}

TEST_CASE("global oracle matches the scheduler on generated 2 x 2 scenarios")
{
    ScenarioConfig cfg;
    cfg.num_users = 2;
    cfg.links_per_user = 2;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        cfg.seed = seed;
        const auto sc = generate(cfg);
        const auto o = global_oracle(sc.users, sc.ap, sc.params);
        const auto s = schedule(sc.users, sc.ap, sc.params);
        CHECK(relative_gap(o.ee, s.ee) < 1e-6);
    }
}

TEST_CASE("global oracle self-consistency")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto inst = random_instance(seed, 3, 3);
        const auto o = global_oracle(inst.users, inst.ap, inst.params);
        REQUIRE_FALSE(o.active_set.empty());
        CHECK(o.ee == system_ee(o.allocation, inst.users, inst.ap, inst.params));
        const auto again = solve_active_set_ee(
            o.active_set, inst.users, inst.params, circuit_charge(o.active_set, inst.users, inst.ap, ChargeScope::system));
        CHECK(relative_gap(again.ee, o.ee) <= 1e-9);
        for (const auto& key : o.active_set)
            CHECK(o.allocation.at(key) > kActivityThreshold);
    }
}

TEST_CASE("global oracle edge cases")
{
    SUBCASE("zero-gain links are never chosen")
    {
        const std::vector<UserTerminal> users{make_user(0, {0.0, 0.04})};
        const auto o = global_oracle(users, {45.0, 5000.0}, reference_params());
        CHECK(o.active_set.entries() == std::vector<LinkKey>{{UserId{0}, LinkId{1}}});
        CHECK(o.ee > 0.0);
    }
    SUBCASE("no usable link gives zero")
    {
        const std::vector<UserTerminal> users{make_user(0, {0.0})};
        const auto o = global_oracle(users, {45.0, 5000.0}, reference_params());
        CHECK(o.ee == 0.0);
        CHECK(o.active_set.empty());
    }
    SUBCASE("more than sixteen links is refused")
    {
        std::vector<UserTerminal> users{make_user(0, std::vector<double>(9, 0.01)),
                                        make_user(1, std::vector<double>(8, 0.01), 30, 100, 1, 9)};
        CHECK_THROWS_AS(global_oracle(users, {45.0, 5000.0}, reference_params()), std::length_error);
        users[1].links.pop_back();
        CHECK_NOTHROW(global_oracle(users, {45.0, 5000.0}, reference_params()));
    }
}

TEST_CASE("grid_oracle_1d")
{
    const AccessPoint ap{45.0, 5000.0};

    SUBCASE("zero gain")
    {
        const auto u = make_user(0, {0.0});
        const auto g = grid_oracle_1d(u.links[0], u, ap, reference_params(), 1000);
        CHECK(g.ee == 0.0);
        CHECK(g.p_mw == 0.0);
    }
    SUBCASE("too few steps")
    {
        const auto u = make_user(0, {0.05});
        CHECK_THROWS_AS(grid_oracle_1d(u.links[0], u, ap, reference_params(), 999), std::invalid_argument);
    }
    SUBCASE("agrees with the closed-form solver")
    {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto inst = random_instance(seed, 1, 1);
            const auto& u = inst.users[0];
            const auto g = grid_oracle_1d(u.links[0], u, inst.ap, inst.params, 4096);
            const auto s = solve_link_ee(u.links[0], u, inst.ap, inst.params);
            CHECK(relative_gap(g.ee, s.ee) < 1e-5);
        }
    }
    SUBCASE("doubling the grid never loses ground")
    {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto inst = random_instance(seed, 1, 1);
            const auto& u = inst.users[0];
            double prev = 0.0;
            for (std::size_t steps = 1000; steps <= 64000; steps *= 2) {
                const auto g = grid_oracle_1d(u.links[0], u, inst.ap, inst.params, steps);
                CHECK(g.ee >= prev * (1 - 1e-12));
                prev = g.ee;
            }
        }
    }
}
