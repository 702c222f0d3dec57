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

#include "eesched/scenario.hpp"

#include "eesched/format.hpp"

#include <boost/program_options.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eesched {

namespace po = boost::program_options;

namespace {

std::string_view trim(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

double parse_double(std::string_view key, std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw std::invalid_argument("config key '" + std::string(key) + "': invalid number '" +
                                    std::string(text) + "'");
    return v;
}

std::uint64_t parse_count(std::string_view key, std::string_view text)
{
    text = trim(text);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("config key '" + std::string(key) + "': expected a nonnegative integer, got '" +
                                    std::string(text) + "'");
    return v;
}

struct Field {
    std::string key;
    std::function<void(ScenarioConfig&, std::string_view)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

template <class T>
Field real_field(std::string key, T ScenarioConfig::*member)
{
    return {key,
            [key, member](ScenarioConfig& c, std::string_view v) { c.*member = parse_double(key, v); },
            [member](const ScenarioConfig& c) { return format_double(c.*member); }};
}

template <class T>
Field count_field(std::string key, T ScenarioConfig::*member)
{
    return {key,
            [key, member](ScenarioConfig& c, std::string_view v) {
                c.*member = static_cast<T>(parse_count(key, v));
            },
            [member](const ScenarioConfig& c) { return std::to_string(c.*member); }};
}

const std::vector<Field>& fields()
{
    static const std::vector<Field> table = [] {
        std::vector<Field> f;
        f.push_back(count_field("num_users", &ScenarioConfig::num_users));
        f.push_back(count_field("links_per_user", &ScenarioConfig::links_per_user));
        f.push_back(real_field("cell_radius", &ScenarioConfig::cell_radius));
        f.push_back(real_field("carrier_freq", &ScenarioConfig::carrier_freq));
        f.push_back(real_field("bandwidth", &ScenarioConfig::bandwidth));
        f.push_back(real_field("noise_density", &ScenarioConfig::noise_density));
        f.push_back(real_field("p_max", &ScenarioConfig::p_max));
        f.push_back(real_field("xi", &ScenarioConfig::xi));
        f.push_back(real_field("p_sta_0", &ScenarioConfig::p_sta_0));
        f.push_back(real_field("p_dyn_0", &ScenarioConfig::p_dyn_0));
        f.push_back(real_field("p_sta_k", &ScenarioConfig::p_sta_k));
        // "lo,hi" or "lo hi"
        f.push_back({"p_dyn_k_range",
                     [](ScenarioConfig& c, std::string_view v) {
                         const auto sep = v.find_first_of(", ");
                         if (sep == std::string_view::npos)
                             throw std::invalid_argument("config key 'p_dyn_k_range': expected 'lo,hi'");
                         auto rest = v.substr(sep + 1);
                         while (!rest.empty() && (rest.front() == ' ' || rest.front() == ','))
                             rest.remove_prefix(1);
                         c.p_dyn_k_range = {parse_double("p_dyn_k_range", v.substr(0, sep)),
                                            parse_double("p_dyn_k_range", rest)};
                     },
                     [](const ScenarioConfig& c) {
                         return format_double(c.p_dyn_k_range[0]) + "," + format_double(c.p_dyn_k_range[1]);
                     }});
        f.push_back(real_field("penetration_loss", &ScenarioConfig::penetration_loss));
        f.push_back(real_field("shadowing_std", &ScenarioConfig::shadowing_std));
        f.push_back(real_field("snr_gap", &ScenarioConfig::snr_gap));
        f.push_back(count_field("seed", &ScenarioConfig::seed));
        f.push_back(real_field("min_distance", &ScenarioConfig::min_distance));
        f.push_back(real_field("bs_height", &ScenarioConfig::bs_height));
        f.push_back(real_field("ms_height", &ScenarioConfig::ms_height));
        f.push_back(real_field("weight", &ScenarioConfig::weight));
        return f;
    }();
    return table;
}

const Field& field(std::string_view key)
{
    for (const auto& f : fields()) {
        if (f.key == key)
            return f;
    }
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

} // namespace

void ScenarioConfig::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument(std::string("scenario config: ") + what);
    };
    require(num_users >= 1, "num_users must be >= 1");
    require(links_per_user >= 1, "links_per_user must be >= 1");
    require(cell_radius > min_distance && min_distance > 0.0, "need 0 < min_distance < cell_radius");
    require(carrier_freq > 0.0, "carrier_freq must be positive");
    require(bandwidth > 0.0, "bandwidth must be positive");
    require(xi > 0.0 && xi <= 1.0, "xi must lie in (0, 1]");
    require(p_sta_0 >= 0.0 && p_dyn_0 >= 0.0 && p_sta_k >= 0.0, "circuit powers must be nonnegative");
    require(p_dyn_k_range[0] >= 0.0 && p_dyn_k_range[0] <= p_dyn_k_range[1],
            "p_dyn_k_range must satisfy 0 <= lo <= hi");
    require(shadowing_std >= 0.0, "shadowing_std must be nonnegative");
    require(snr_gap >= 1.0, "snr_gap must be >= 1");
    require(bs_height > 0.0 && ms_height > 0.0, "antenna heights must be positive");
    require(weight >= 0.0, "weight must be nonnegative");
}

const std::vector<std::string>& scenario_config_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& f : fields())
            k.push_back(f.key);
        return k;
    }();
    return keys;
}

void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value)
{
    field(key).set(cfg, value);
}

std::string get_config_value(const ScenarioConfig& cfg, std::string_view key)
{
    return field(key).get(cfg);
}

void load_scenario_config(ScenarioConfig& cfg, std::istream& in)
{
    po::options_description desc;
    for (const auto& f : fields())
        desc.add_options()(f.key.c_str(), po::value<std::string>());
    po::variables_map vm;
    try {
        po::store(po::parse_config_file(in, desc, false), vm);
    } catch (const po::error& e) {
        throw std::invalid_argument(std::string("config file: ") + e.what());
    }
    ScenarioConfig updated = cfg;
    for (const auto& f : fields()) {
        if (vm.count(f.key))
            f.set(updated, vm[f.key].as<std::string>());
    }
    cfg = updated;
}

void load_scenario_config(ScenarioConfig& cfg, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open config file " + path.string());
    try {
        load_scenario_config(cfg, in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

double cost231_hata_db(double freq_mhz, double bs_height_m, double ms_height_m, double distance_km)
{
    const double lf = std::log10(freq_mhz);
    const double lhb = std::log10(bs_height_m);
    const double mobile_correction = (1.1 * lf - 0.7) * ms_height_m - (1.56 * lf - 0.8);
    return 46.3 + 33.9 * lf - 13.82 * lhb - mobile_correction + (44.9 - 6.55 * lhb) * std::log10(distance_km);
}

double dbm_to_mw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

Scenario generate(const ScenarioConfig& cfg)
{
    cfg.validate();

    Scenario s;
    s.params.bandwidth_hz = cfg.bandwidth;
    s.params.snr_gap = cfg.snr_gap;
    s.params.noise_mw = dbm_to_mw(cfg.noise_density) * cfg.bandwidth;
    s.params.amplifier_efficiency = cfg.xi;
    s.ap = {cfg.p_dyn_0, cfg.p_sta_0};

    const double p_max_mw = dbm_to_mw(cfg.p_max);
    const double r2_min = cfg.min_distance * cfg.min_distance;
    const double r2_max = cfg.cell_radius * cfg.cell_radius;

    std::mt19937_64 rng(cfg.seed);
    for (std::size_t k = 0; k < cfg.num_users; ++k) {
        UserPlacement place;
        place.distance_m = std::sqrt(r2_min + std::uniform_real_distribution<double>(0.0, 1.0)(rng) * (r2_max - r2_min));
        place.shadowing_db = std::normal_distribution<double>(0.0, 1.0)(rng) * cfg.shadowing_std;
        const double p_dyn = std::uniform_real_distribution<double>(cfg.p_dyn_k_range[0], cfg.p_dyn_k_range[1])(rng);
        place.path_loss_db = cost231_hata_db(cfg.carrier_freq * 1e3, cfg.bs_height, cfg.ms_height,
                                             place.distance_m / 1e3);
        const double large_scale = std::pow(10.0, -(place.path_loss_db + cfg.penetration_loss + place.shadowing_db) / 10.0);

        UserTerminal u;
        u.id = UserId{static_cast<std::uint32_t>(k)};
        u.weight = cfg.weight;
        u.p_dyn_mw = p_dyn;
        u.p_sta_mw = cfg.p_sta_k;
        for (std::size_t i = 0; i < cfg.links_per_user; ++i) {
            const double fading = std::exponential_distribution<double>(1.0)(rng);
            u.links.push_back({LinkId{static_cast<std::uint32_t>(k * cfg.links_per_user + i)},
                               large_scale * fading, p_max_mw});
        }
        s.users.push_back(std::move(u));
        s.placement.push_back(place);
    }
    return s;
}

void write_scenario_csv(const Scenario& scenario, std::ostream& out)
{
    out << "user_id,link_id,gain,p_dyn_k\n";
    for (const auto& u : scenario.users) {
        for (const auto& l : u.links)
            out << u.id.value << ',' << l.id.value << ',' << format_double(l.gain) << ','
                << format_double(u.p_dyn_mw) << '\n';
    }
}

void write_scenario_csv(const Scenario& scenario, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::ios_base::failure("cannot write scenario CSV " + path.string());
    write_scenario_csv(scenario, out);
    if (!out)
        throw std::ios_base::failure("error writing scenario CSV " + path.string());
}

} // namespace eesched
