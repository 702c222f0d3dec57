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

#include "eesched/ee_solver.hpp"

#include "eesched/power_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eesched {

void SolverConfig::validate() const
{
    if (!(tol_ratio > 0.0))
        throw std::invalid_argument("tol_ratio must be positive");
    if (max_iter < 1 || bisection_max_iter < 1)
        throw std::invalid_argument("iteration limits must be >= 1");
    if (!(bisection_rel_tol > 0.0))
        throw std::invalid_argument("bisection_rel_tol must be positive");
}

ActiveLinkSet::ActiveLinkSet(std::initializer_list<LinkKey> keys)
{
    for (const auto& k : keys)
        insert(k);
}

bool ActiveLinkSet::insert(LinkKey key)
{
    if (contains(key))
        return false;
    entries_.push_back(key);
    return true;
}

bool ActiveLinkSet::contains(LinkKey key) const
{
    return std::find(entries_.begin(), entries_.end(), key) != entries_.end();
}

bool ActiveLinkSet::contains_user(UserId user) const
{
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const LinkKey& k) { return k.user == user; });
}

std::vector<UserId> ActiveLinkSet::users() const
{
    std::vector<UserId> out;
    for (const auto& k : entries_) {
        if (std::find(out.begin(), out.end(), k.user) == out.end())
            out.push_back(k.user);
    }
    return out;
}

ActiveLinkSet ActiveLinkSet::restricted_to(UserId user) const
{
    ActiveLinkSet out;
    for (const auto& k : entries_) {
        if (k.user == user)
            out.insert(k);
    }
    return out;
}

bool ActiveLinkSet::same_members(const ActiveLinkSet& other) const
{
    if (size() != other.size())
        return false;
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const LinkKey& k) { return other.contains(k); });
}

double circuit_charge(const ActiveLinkSet& active,
                      std::span<const UserTerminal> users,
                      const AccessPoint& ap,
                      ChargeScope scope)
{
    double charge = 0.0;
    for (const auto& key : active)
        charge += find_user(users, key.user).p_dyn_mw + ap.p_dyn_mw;
    for (const auto& id : active.users())
        charge += find_user(users, id).p_sta_mw;
    if (scope == ChargeScope::system)
        charge += ap.p_sta_mw;
    return charge;
}

namespace {

constexpr double kLn2 = std::numbers::ln2;

struct Term {
    LinkKey key;
    double weight;
    double snr_per_mw; // g / (Gamma sigma^2)
    double p_max;
};

// Ratio program over a fixed set of links. Rates in bit/s, powers in mW, so
// ratios are bit/s per mW until converted at the boundary.
class FractionalProgram {
public:
    FractionalProgram(std::vector<Term> terms, const SystemParams& params, double circuit_mw,
                      bool charge_transmit)
        : terms_(std::move(terms))
        , bandwidth_(params.bandwidth_hz)
        , xi_(params.amplifier_efficiency)
        , circuit_(circuit_mw)
        , charge_transmit_(charge_transmit)
    {
    }

    // Maximizer of N(p) - lambda D(p), snapped at the activity threshold.
    void argmax(double lambda, std::vector<double>& p) const
    {
        p.resize(terms_.size());
        for (std::size_t j = 0; j < terms_.size(); ++j) {
            const auto& t = terms_[j];
            double v = t.p_max;
            if (charge_transmit_) {
                v = t.weight * bandwidth_ * xi_ / (lambda * kLn2) - 1.0 / t.snr_per_mw;
                v = std::clamp(v, 0.0, t.p_max);
            }
            p[j] = v < kActivityThreshold ? 0.0 : v;
        }
    }

    double numerator(const std::vector<double>& p) const
    {
        double n = 0.0;
        for (std::size_t j = 0; j < terms_.size(); ++j)
            n += terms_[j].weight * bandwidth_ * std::log1p(terms_[j].snr_per_mw * p[j]) / kLn2;
        return n;
    }

    double denominator(const std::vector<double>& p) const
    {
        double d = 0.0;
        if (charge_transmit_) {
            for (double v : p)
                d += v;
            d /= xi_;
        }
        return d + circuit_;
    }

    double ratio(const std::vector<double>& p) const
    {
        const double d = denominator(p);
        return d > 0.0 ? numerator(p) / d : 0.0;
    }

    std::vector<double> at_max_power() const
    {
        std::vector<double> p;
        for (const auto& t : terms_)
            p.push_back(t.p_max);
        return p;
    }

    // Upper bound on the optimal ratio: N <= N(p_max) and D >= circuit; also
    // log(1 + x) <= x bounds each term's marginal efficiency.
    double ratio_upper_bound() const
    {
        double bound = std::numeric_limits<double>::infinity();
        if (circuit_ > 0.0)
            bound = numerator(at_max_power()) / circuit_;
        if (charge_transmit_) {
            double slope = 0.0;
            for (const auto& t : terms_)
                slope = std::max(slope, t.weight * bandwidth_ * xi_ * t.snr_per_mw / kLn2);
            bound = std::min(bound, slope);
        }
        return bound;
    }

    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
    double bandwidth_;
    double xi_;
    double circuit_;
    bool charge_transmit_;
};

EeSolution finish(const FractionalProgram& prog, const std::vector<double>& p, double ratio,
                  int iterations, bool converged)
{
    EeSolution sol;
    sol.ee = to_bit_per_joule(ratio);
    sol.iterations = iterations;
    sol.converged = converged;
    for (std::size_t j = 0; j < p.size(); ++j) {
        sol.powers.set(prog.terms()[j].key, p[j]);
        if (!(p[j] > kActivityThreshold))
            sol.support_ok = false;
    }
    return sol;
}

EeSolution run_dinkelbach(const FractionalProgram& prog, const SolverConfig& cfg)
{
    std::vector<double> p = prog.at_max_power();
    double lambda = prog.ratio(p);
    if (!(lambda > 0.0))
        return finish(prog, std::vector<double>(p.size(), 0.0), 0.0, 0, true);

    double best_ratio = lambda;
    std::vector<double> best_p = p;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        prog.argmax(lambda, p);
        const double n = prog.numerator(p);
        const double d = prog.denominator(p);
        if (!(d > 0.0))
            throw std::domain_error("fractional program has a vanishing denominator");
        const double f = n - lambda * d;
        const double next = n / d;
        if (next >= best_ratio) {
            best_ratio = next;
            best_p = p;
        }
        const bool small_step = std::abs(next - lambda) <= cfg.tol_ratio * next;
        const bool small_f = std::abs(f) <= cfg.tol_ratio * lambda * d;
        lambda = next;
        if (small_step || small_f)
            return finish(prog, best_p, best_ratio, it, true);
    }
    return finish(prog, best_p, best_ratio, cfg.max_iter, false);
}

EeSolution run_bisection(const FractionalProgram& prog, const SolverConfig& cfg)
{
    std::vector<double> p = prog.at_max_power();
    if (!(prog.ratio(p) > 0.0))
        return finish(prog, std::vector<double>(p.size(), 0.0), 0.0, 0, true);

    double lo = 0.0;
    double hi = prog.ratio_upper_bound();
    if (!std::isfinite(hi))
        throw std::domain_error("fractional program has an unbounded ratio");

    auto gap = [&](double lambda) {
        prog.argmax(lambda, p);
        return prog.numerator(p) - lambda * prog.denominator(p);
    };

    int it = 0;
    bool converged = false;
    while (it < cfg.bisection_max_iter) {
        ++it;
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= cfg.bisection_rel_tol * hi) {
            converged = true;
            break;
        }
    }
    // F(lo) > 0 (or lo == 0), so the ratio at p(lo) lies in (lo, optimum].
    prog.argmax(std::max(lo, std::numeric_limits<double>::min()), p);
    return finish(prog, p, prog.ratio(p), it, converged);
}

EeSolution solve_program(const FractionalProgram& prog, const SolverConfig& cfg)
{
    cfg.validate();
    return cfg.method == RootFinder::bisection ? run_bisection(prog, cfg) : run_dinkelbach(prog, cfg);
}

} // namespace

double power_for_ee(double ee_guess,
                    const RadioLink& link,
                    double weight,
                    const SystemParams& params,
                    bool charge_transmit_power)
{
    if (!(ee_guess > 0.0))
        throw std::domain_error("power_for_ee: EE guess must be positive");
    if (!(link.gain > 0.0))
        throw std::domain_error("power_for_ee: link gain must be positive");
    FractionalProgram prog({{LinkKey{}, weight, link.gain / params.noise_floor_mw(), link.p_max_mw}},
                           params, 0.0, charge_transmit_power);
    std::vector<double> p;
    prog.argmax(to_bit_per_mw(ee_guess), p);
    return p.front();
}

EeSolution solve_active_set_ee(const ActiveLinkSet& active,
                               std::span<const UserTerminal> users,
                               const SystemParams& params,
                               double circuit_mw,
                               const SolverConfig& cfg)
{
    if (active.empty())
        throw std::domain_error("solve_active_set_ee: empty active set");
    if (!(circuit_mw >= 0.0))
        throw std::domain_error("solve_active_set_ee: negative circuit constant");
    if (circuit_mw == 0.0 && cfg.charge_transmit_power)
        throw std::domain_error("solve_active_set_ee: zero circuit power, optimum is not attained");

    std::vector<Term> terms;
    terms.reserve(active.size());
    for (const auto& key : active) {
        const auto& user = find_user(users, key.user);
        const auto& link = user.link(key.link);
        if (!(link.gain > 0.0))
            throw std::domain_error("solve_active_set_ee: zero gain on " + to_string(key));
        terms.push_back({key, user.weight, link.gain / params.noise_floor_mw(), link.p_max_mw});
    }
    return solve_program(FractionalProgram(std::move(terms), params, circuit_mw, cfg.charge_transmit_power),
                         cfg);
}

EeSolution solve_link_ee(const RadioLink& link,
                         const UserTerminal& user,
                         const AccessPoint& ap,
                         const SystemParams& params,
                         const SolverConfig& cfg)
{
    if (!(link.gain >= 0.0))
        throw std::domain_error("solve_link_ee: negative gain");
    const LinkKey key{user.id, link.id};
    if (link.gain == 0.0) {
        EeSolution sol;
        sol.powers.set(key, 0.0);
        sol.converged = true;
        sol.support_ok = false;
        return sol;
    }
    const ActiveLinkSet single{key};
    return solve_active_set_ee(single, std::span<const UserTerminal>(&user, 1), params,
                               user.p_dyn_mw + ap.p_dyn_mw, cfg);
}

UserEeResult solve_user_ee(const UserTerminal& user,
                           const AccessPoint& ap,
                           const SystemParams& params,
                           const SolverConfig& cfg)
{
    if (user.links.empty())
        throw std::invalid_argument("solve_user_ee: user " + std::to_string(user.id.value) + " has no links");

    const std::span<const UserTerminal> self(&user, 1);
    UserEeResult out;
    out.user = user.id;
    out.solution.converged = true;

    std::vector<LinkEe> useless;
    for (const auto& link : user.links) {
        const auto sol = solve_link_ee(link, user, ap, params, cfg);
        const LinkKey key{user.id, link.id};
        LinkEe le{key, sol.ee, sol.powers.at(key)};
        if (le.ee > 0.0)
            out.link_ee.push_back(le);
        else
            useless.push_back(le);
    }
    std::stable_sort(out.link_ee.begin(), out.link_ee.end(), [](const LinkEe& a, const LinkEe& b) {
        if (a.ee != b.ee)
            return a.ee > b.ee;
        return a.key < b.key;
    });

    double ee = 0.0;
    std::size_t next = 0;
    for (; next < out.link_ee.size(); ++next) {
        const auto& candidate = out.link_ee[next];
        if (!(ee <= candidate.ee))
            break;
        out.active.insert(candidate.key);
        out.solution = solve_active_set_ee(out.active, self, params,
                                           circuit_charge(out.active, self, ap, ChargeScope::user), cfg);
        out.admissions.push_back({candidate, ee, out.solution.ee});
        ee = out.solution.ee;
    }
    out.rejected.assign(out.link_ee.begin() + static_cast<std::ptrdiff_t>(next), out.link_ee.end());
    out.rejected.insert(out.rejected.end(), useless.begin(), useless.end());
    out.link_ee.insert(out.link_ee.end(), useless.begin(), useless.end());
    return out;
}

} // namespace eesched
