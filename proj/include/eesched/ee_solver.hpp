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

// Single-ratio EE programs at link, user and fixed-active-set scope.
//
// Every program here has the form
//
//     maximize   sum_j w_j * B * log2(1 + a_j p_j)
//                ------------------------------------   over 0 <= p_j <= p_max_j
//                sum_j p_j / xi + circuit
//
// with a_j = g_j / (Gamma sigma^2) and a fixed circuit constant. For a ratio
// guess lambda the subtractive problem separates per link and its maximizer is
// the clipped water level  w_j B xi / (lambda ln 2) - 1 / a_j.  The optimal
// ratio is the root of F(lambda) = max_p [N(p) - lambda D(p)], found either by
// Dinkelbach iteration or by bisection on lambda.

#include "eesched/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace eesched {

enum class RootFinder { dinkelbach, bisection };

struct SolverConfig {
    /// Relative change in EE (or |F| relative to the numerator) that ends a solve.
    double tol_ratio = 1e-9;
    int max_iter = 100;
    /// Bisection stops once the bracket is narrower than this fraction of its
    /// current upper end.
    double bisection_rel_tol = 1e-10;
    int bisection_max_iter = 200;
    RootFinder method = RootFinder::dinkelbach;
    /// When false, transmit power is costless in the objective (receiver-side
    /// baseline) and every link in scope runs at p_max.
    bool charge_transmit_power = true;

    void validate() const;
};

/// Set of (user, link) pairs. Keeps insertion order, which fixes the
/// summation order of every solve over the set.
class ActiveLinkSet {
public:
    ActiveLinkSet() = default;
    ActiveLinkSet(std::initializer_list<LinkKey> keys);

    /// Returns false if the key was already present.
    bool insert(LinkKey key);
    bool contains(LinkKey key) const;
    bool contains_user(UserId user) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::vector<LinkKey>::const_iterator begin() const { return entries_.begin(); }
    std::vector<LinkKey>::const_iterator end() const { return entries_.end(); }
    const std::vector<LinkKey>& entries() const { return entries_; }

    /// Distinct users in order of first appearance.
    std::vector<UserId> users() const;
    /// Entries belonging to one user (Phi_k).
    ActiveLinkSet restricted_to(UserId user) const;

    /// Set equality, ignoring order.
    bool same_members(const ActiveLinkSet& other) const;

private:
    std::vector<LinkKey> entries_;
};

struct EeSolution {
    double ee = 0.0; ///< bit/J
    PowerAllocation powers;
    int iterations = 0;
    bool converged = false;
    /// False if some link in scope ended with power <= kActivityThreshold.
    bool support_ok = true;
};

/// Which fixed circuit charges an active set carries.
enum class ChargeScope {
    /// Per-link user + AP dynamic power, plus each involved user's static power.
    user,
    /// As user scope, plus the AP static power.
    system,
};

/// Fixed circuit constant (mW) implied by an active set at the given scope.
double circuit_charge(const ActiveLinkSet& active,
                      std::span<const UserTerminal> users,
                      const AccessPoint& ap,
                      ChargeScope scope);

/// Clipped water-level power for a ratio guess in bit/J.
/// Throws std::domain_error if ee_guess <= 0 or the gain is not positive.
double power_for_ee(double ee_guess,
                    const RadioLink& link,
                    double weight,
                    const SystemParams& params,
                    bool charge_transmit_power = true);

/// Link EE: one link with its per-link dynamic charges at both ends.
EeSolution solve_link_ee(const RadioLink& link,
                         const UserTerminal& user,
                         const AccessPoint& ap,
                         const SystemParams& params,
                         const SolverConfig& cfg = {});

/// Optimal ratio over a fixed active set with a caller-supplied circuit
/// constant. Returns a power for every member of `active`; any that clip to
/// zero are reported through support_ok rather than dropped.
EeSolution solve_active_set_ee(const ActiveLinkSet& active,
                               std::span<const UserTerminal> users,
                               const SystemParams& params,
                               double circuit_mw,
                               const SolverConfig& cfg = {});

struct LinkEe {
    LinkKey key;
    double ee = 0.0;   ///< bit/J
    double p_mw = 0.0; ///< maximizer of the link ratio
};

/// One step of a greedy admission loop.
struct LinkAdmission {
    LinkEe link;
    double ee_before = 0.0;
    double ee_after = 0.0;
};

struct UserEeResult {
    UserId user;
    EeSolution solution;
    ActiveLinkSet active;
    /// Every link's own optimum, in admission order (ee descending).
    std::vector<LinkEe> link_ee;
    /// Links not admitted, in order. Zero-gain links are listed here too.
    std::vector<LinkEe> rejected;
    std::vector<LinkAdmission> admissions;
};

/// Greedy link activation for one user: sort links by their own optimal EE
/// and admit while the user EE does not exceed the next link's EE.
UserEeResult solve_user_ee(const UserTerminal& user,
                           const AccessPoint& ap,
                           const SystemParams& params,
                           const SolverConfig& cfg = {});

} // namespace eesched
