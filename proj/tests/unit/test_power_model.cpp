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
#include "support/instances.hpp"

#include <doctest.h>

#include <random>

using namespace eesched;
using namespace eesched::testing;

namespace {

// One link whose a = g / (Gamma sigma^2) is 1 per mW.
SystemParams unit_noise_params()
{
    return {15000.0, 1.0, 1.0, 0.38};
}

} // namespace

TEST_CASE("indicator")
{
    CHECK(indicator(0.0) == 0);
    CHECK(indicator(5.0) == 1);
    CHECK(indicator(1e-300) == 1);
}

TEST_CASE("link_rate examples")
{
    const auto params = unit_noise_params();
    const RadioLink link{LinkId{0}, 1.0, 10.0};
    CHECK(link_rate(3.0, link, params) == doctest::Approx(30000.0).epsilon(1e-15));
    CHECK(link_rate(1.0, link, params) == doctest::Approx(15000.0).epsilon(1e-15));
    CHECK(link_rate(0.0, link, params) == 0.0);

    const RadioLink dead{LinkId{1}, 0.0, 10.0};
    CHECK(link_rate(5.0, dead, params) == 0.0);

    CHECK_THROWS_AS(link_rate(-1e-9, link, params), std::domain_error);
    CHECK_THROWS_AS(link_rate(10.5, link, params), std::domain_error);
}

TEST_CASE("system_rate is the weighted sum of link rates")
{
    const auto params = unit_noise_params();
    std::vector<UserTerminal> users(2);
    users[0] = {UserId{0}, 1.0, 30.0, 100.0, {{LinkId{0}, 1.0, 10.0}}};
    users[1] = {UserId{1}, 2.0, 30.0, 100.0, {{LinkId{1}, 1.0, 10.0}}};

    PowerAllocation alloc;
    CHECK(system_rate(alloc, users, params) == 0.0);

    alloc.set({UserId{0}, LinkId{0}}, 1.0);
    CHECK(system_rate(alloc, users, params) == link_rate(1.0, users[0].links[0], params));

    alloc.set({UserId{1}, LinkId{1}}, 1.0);
    CHECK(system_rate(alloc, users, params) == doctest::Approx(45000.0).epsilon(1e-15));
}

TEST_CASE("total_power breakdown with reference values")
{
    const auto params = reference_params();
    const AccessPoint ap{45.0, 5000.0};
    std::vector<UserTerminal> users{make_user(0, {1.0, 1.0, 1.0}, 30.0, 100.0)};

    SUBCASE("one active link")
    {
        PowerAllocation alloc;
        alloc.set({UserId{0}, LinkId{0}}, 100.0);
        const auto p = total_power(alloc, users, ap, params);
        CHECK(p.transmit == doctest::Approx(263.1578947368421).epsilon(1e-12));
        CHECK(p.total == doctest::Approx(5438.157894736842).epsilon(1e-12));
        CHECK(p.user_dynamic == 30.0);
        CHECK(p.user_static == 100.0);
        CHECK(p.ap_dynamic == 45.0);
        CHECK(p.ap_static == 5000.0);
    }
    SUBCASE("nothing active still pays the AP static power")
    {
        const auto p = total_power(PowerAllocation{}, users, ap, params);
        CHECK(p.total == 5000.0);
        CHECK(p.user_static == 0.0);
    }
    SUBCASE("two active links, one at zero")
    {
        PowerAllocation alloc;
        alloc.set({UserId{0}, LinkId{0}}, 10.0);
        alloc.set({UserId{0}, LinkId{1}}, 20.0);
        alloc.set({UserId{0}, LinkId{2}}, 0.0);
        const auto p = total_power(alloc, users, ap, params);
        CHECK(p.user_dynamic == 60.0);
        CHECK(p.ap_dynamic == 90.0);
        CHECK(p.total == doctest::Approx(p.transmit + p.user_dynamic + p.user_static + p.ap_dynamic + p.ap_static));
    }
}

TEST_CASE("system_ee")
{
    SUBCASE("zero allocation")
    {
        std::vector<UserTerminal> users{make_user(0, {1.0})};
        CHECK(system_ee(PowerAllocation{}, users, {45.0, 5000.0}, reference_params()) == 0.0);
        CHECK(system_ee(PowerAllocation{}, users, {0.0, 0.0}, reference_params()) == 0.0);
    }
    SUBCASE("15000 bit/s over 5 W")
    {
        const SystemParams params{15000.0, 1.0, 1.0, 1.0};
        std::vector<UserTerminal> users{{UserId{0}, 1.0, 0.0, 0.0, {{LinkId{0}, 1.0, 10.0}}}};
        PowerAllocation alloc;
        alloc.set({UserId{0}, LinkId{0}}, 1.0);
        CHECK(system_ee(alloc, users, {0.0, 4999.0}, params) == doctest::Approx(3000.0).epsilon(1e-14));
    }
    SUBCASE("weights scale EE linearly")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto inst = random_instance(seed);
            PowerAllocation alloc;
            std::mt19937_64 rng(seed);
            for (const auto& u : inst.users)
                for (const auto& l : u.links)
                    alloc.set({u.id, l.id}, std::uniform_real_distribution<double>(0.0, l.p_max_mw)(rng));
            const double base = system_ee(alloc, inst.users, inst.ap, inst.params);
            for (auto& u : inst.users)
                u.weight *= 3.5;
            CHECK(system_ee(alloc, inst.users, inst.ap, inst.params) == doctest::Approx(3.5 * base).epsilon(1e-13));
        }
    }
}

TEST_CASE("allocation and population validation")
{
    std::vector<UserTerminal> users{make_user(0, {1.0, 2.0})};
    PowerAllocation alloc;
    alloc.set({UserId{0}, LinkId{7}}, 1.0);
    CHECK_THROWS_AS(system_rate(alloc, users, reference_params()), std::invalid_argument);

    PowerAllocation too_much;
    too_much.set({UserId{0}, LinkId{0}}, kPmax25dBm * 1.01);
    CHECK_THROWS_AS(total_power(too_much, users, {}, reference_params()), std::invalid_argument);

    users.push_back(make_user(1, {1.0}, 30.0, 100.0, 1.0, 1)); // link id 1 reused
    CHECK_THROWS_AS(validate_population(users, {}), std::invalid_argument);

    SystemParams bad = reference_params();
    bad.amplifier_efficiency = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = reference_params();
    bad.snr_gap = 0.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("property: power parts are monotone and rate is concave per coordinate")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = random_instance(seed);
        std::mt19937_64 rng(seed * 7 + 1);
        PowerAllocation alloc;
        for (const auto& u : inst.users)
            for (const auto& l : u.links)
                alloc.set({u.id, l.id}, std::uniform_real_distribution<double>(0.0, 0.5 * l.p_max_mw)(rng));

        for (const auto& u : inst.users) {
            for (const auto& l : u.links) {
                const LinkKey key{u.id, l.id};
                const double p = alloc.at(key);
                const double h = 0.1 * l.p_max_mw;

                auto raised = alloc;
                raised.set(key, p + h);
                const auto before = total_power(alloc, inst.users, inst.ap, inst.params);
                const auto after = total_power(raised, inst.users, inst.ap, inst.params);
                CHECK(after.transmit >= before.transmit);
                CHECK(after.user_dynamic >= before.user_dynamic);
                CHECK(after.user_static >= before.user_static);
                CHECK(after.ap_dynamic >= before.ap_dynamic);
                CHECK(after.ap_static >= before.ap_static);

                auto at = [&](double v) {
                    auto a = alloc;
                    a.set(key, v);
                    return system_rate(a, inst.users, inst.params);
                };
                const double r0 = at(p), r1 = at(p + h), r2 = at(p + 2 * h);
                CHECK(r1 >= r0);
                CHECK(r2 - 2 * r1 + r0 <= 1e-9 * r2);
            }
        }
    }
}

TEST_CASE("property: zero-power entries are inert")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = random_instance(seed);
        PowerAllocation with_zero;
        PowerAllocation without;
        bool first = true;
        for (const auto& u : inst.users) {
            for (const auto& l : u.links) {
                if (first) {
                    with_zero.set({u.id, l.id}, 0.0);
                    first = false;
                } else {
                    with_zero.set({u.id, l.id}, 0.25 * l.p_max_mw);
                    without.set({u.id, l.id}, 0.25 * l.p_max_mw);
                }
            }
        }
        CHECK(system_rate(with_zero, inst.users, inst.params) == system_rate(without, inst.users, inst.params));
        CHECK(total_power(with_zero, inst.users, inst.ap, inst.params).total ==
              total_power(without, inst.users, inst.ap, inst.params).total);
        CHECK(system_ee(with_zero, inst.users, inst.ap, inst.params) ==
              system_ee(without, inst.users, inst.ap, inst.params));
    }
}
