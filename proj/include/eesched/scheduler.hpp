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

// Joint user scheduling, link activation and power control.
//
// Each user is first solved on its own (solve_user_ee). Its admitted links
// become one "real" unit carrying the user EE; every link it rejected becomes
// a single-link "virtual" unit carrying that link's own EE and no static
// charge. All units are sorted by EE and admitted greedily at system scope
// until the system EE would exceed the next unit's EE.

#include "eesched/ee_solver.hpp"
#include "eesched/types.hpp"

#include <cstddef>
#include <set>
#include <span>
#include <vector>

namespace eesched {

enum class UnitKind { real, virtual_user };

struct ScheduleUnit {
    UnitKind kind = UnitKind::real;
    UserId source;
    ActiveLinkSet links;
    double ee = 0.0;              ///< bit/J
    double static_charge_mw = 0.0; ///< P_sta of the source for real units, 0 for virtual ones
};

struct UnitAdmission {
    ScheduleUnit unit;
    double ee_before = 0.0;
    double ee_after = 0.0;
};

struct ScheduleResult {
    ActiveLinkSet active_links;
    std::set<UserId> scheduled_users;
    PowerAllocation allocation;
    double ee = 0.0;           ///< system_ee(allocation) under the inputs given to schedule()
    double objective_ee = 0.0; ///< final ratio reported by the fixed-set solver
    double rate = 0.0;
    PowerBreakdown power;
    std::vector<UnitAdmission> admissions;
    std::vector<ScheduleUnit> units;
    std::vector<UserEeResult> per_user;
    /// Fixed-active-set solves performed at user and system scope.
    std::size_t user_scope_solves = 0;
    std::size_t system_scope_solves = 0;
    bool converged = true;
    /// False if some admitted link ended at zero power.
    bool support_ok = true;
};

/// One real unit per user with a nonempty active set, one virtual unit per
/// rejected positive-EE link; sorted by EE descending, real before virtual on
/// ties, then by ids.
std::vector<ScheduleUnit> build_units(std::span<const UserEeResult> per_user,
                                      std::span<const UserTerminal> users);

struct ScheduleOptions {
    /// Worker threads for the per-user pre-solves. Output does not depend on it.
    unsigned threads = 1;
};

ScheduleResult schedule(std::span<const UserTerminal> users,
                        const AccessPoint& ap,
                        const SystemParams& params,
                        const SolverConfig& cfg = {},
                        const ScheduleOptions& opts = {});

} // namespace eesched
