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

// Domain types shared by every module: system constants, terminals, links,
// the access point, and power allocations. Powers are in mW throughout.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eesched {

/// A link is active iff its power exceeds this threshold (mW). Solvers snap
/// anything below it to exactly zero before evaluation.
inline constexpr double kActivityThreshold = 1e-12;

/// Raised when an internal guarantee of the scheduling algorithm is violated.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct UserId {
    std::uint32_t value{};
    auto operator<=>(const UserId&) const = default;
};

struct LinkId {
    std::uint32_t value{};
    auto operator<=>(const LinkId&) const = default;
};

/// A (user, link) pair. Ordered by user first, then link.
struct LinkKey {
    UserId user;
    LinkId link;
    auto operator<=>(const LinkKey&) const = default;
};

std::string to_string(const LinkKey& key);

struct SystemParams {
    double bandwidth_hz = 15000.0;
    double snr_gap = 1.0;
    double noise_mw = 0.0;
    double amplifier_efficiency = 0.38;

    /// Gamma * sigma^2, the effective noise floor in the rate formula.
    double noise_floor_mw() const { return snr_gap * noise_mw; }
    void validate() const;
};

struct RadioLink {
    LinkId id;
    double gain = 0.0;
    double p_max_mw = 0.0;
};

struct UserTerminal {
    UserId id;
    double weight = 1.0;
    double p_dyn_mw = 0.0;
    double p_sta_mw = 0.0;
    std::vector<RadioLink> links;

    const RadioLink& link(LinkId id) const;
};

struct AccessPoint {
    double p_dyn_mw = 0.0;
    double p_sta_mw = 0.0;
};

/// Checks per-entity invariants plus id uniqueness. Link ids must be unique
/// across the whole population, which makes the per-user link sets disjoint.
void validate_population(std::span<const UserTerminal> users, const AccessPoint& ap);

const UserTerminal& find_user(std::span<const UserTerminal> users, UserId id);

/// Per-(user, link) transmit powers; absent entries are zero.
class PowerAllocation {
public:
    using Map = std::map<LinkKey, double>;

    void set(LinkKey key, double power_mw);
    double at(LinkKey key) const;
    void erase(LinkKey key) { powers_.erase(key); }
    bool contains(LinkKey key) const { return powers_.contains(key); }
    std::size_t size() const { return powers_.size(); }
    bool empty() const { return powers_.empty(); }

    Map::const_iterator begin() const { return powers_.begin(); }
    Map::const_iterator end() const { return powers_.end(); }

    /// Throws std::invalid_argument if a key is unknown or a power leaves its box.
    void validate(std::span<const UserTerminal> users) const;

    bool operator==(const PowerAllocation&) const = default;

private:
    Map powers_;
};

struct PowerBreakdown {
    double transmit = 0.0;
    double user_dynamic = 0.0;
    double user_static = 0.0;
    double ap_dynamic = 0.0;
    double ap_static = 0.0;
    double total = 0.0;
};

} // namespace eesched
