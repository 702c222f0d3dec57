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

// Ground-truth solvers used to certify the scheduler on small instances.

#include "eesched/ee_solver.hpp"
#include "eesched/types.hpp"

#include <cstddef>
#include <span>

namespace eesched {

struct OracleResult {
    double ee = 0.0; ///< bit/J
    PowerAllocation allocation;
    ActiveLinkSet active_set;
    std::size_t subsets_examined = 0;
};

inline constexpr std::size_t kMaxOracleLinks = 16;

/// Enumerates every subset of links, solves each with its exact circuit
/// charges, discards subsets whose solution clips a member to zero power, and
/// keeps the best. Ties go to the lowest subset encoding (bit j = j-th link in
/// user-then-link order). Throws std::length_error above kMaxOracleLinks.
OracleResult global_oracle(std::span<const UserTerminal> users,
                           const AccessPoint& ap,
                           const SystemParams& params,
                           const SolverConfig& cfg = {});

struct GridResult {
    double ee = 0.0; ///< bit/J
    double p_mw = 0.0;
};

/// Link EE by uniform grid search over [0, p_max] followed by golden-section
/// refinement around the best cell. Requires steps >= 1000.
GridResult grid_oracle_1d(const RadioLink& link,
                          const UserTerminal& user,
                          const AccessPoint& ap,
                          const SystemParams& params,
                          std::size_t steps);

} // namespace eesched
