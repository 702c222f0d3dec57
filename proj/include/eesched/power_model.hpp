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

// Rate, power and energy-efficiency evaluation for an arbitrary allocation.
// Everything here is a pure function of its arguments.

#include "eesched/types.hpp"

#include <span>

namespace eesched {

/// 1 if x > 0, else 0.
int indicator(double x);

/// Achievable rate in bit/s of one link at transmit power p_mw.
/// Throws std::domain_error unless 0 <= p_mw <= link.p_max_mw.
double link_rate(double p_mw, const RadioLink& link, const SystemParams& params);

/// Weighted sum rate over all users, bit/s.
double system_rate(const PowerAllocation& alloc,
                   std::span<const UserTerminal> users,
                   const SystemParams& params);

/// Total consumption split into its transmit and circuit parts (mW).
/// The AP static term is charged unconditionally.
PowerBreakdown total_power(const PowerAllocation& alloc,
                           std::span<const UserTerminal> users,
                           const AccessPoint& ap,
                           const SystemParams& params);

/// Weighted system EE in bit/J. Returns 0 when the total power is zero.
double system_ee(const PowerAllocation& alloc,
                 std::span<const UserTerminal> users,
                 const AccessPoint& ap,
                 const SystemParams& params);

/// bit/s per mW -> bit/J.
inline constexpr double to_bit_per_joule(double bits_per_mw) { return bits_per_mw * 1e3; }
inline constexpr double to_bit_per_mw(double bit_per_joule) { return bit_per_joule * 1e-3; }

} // namespace eesched
