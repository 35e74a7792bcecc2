// SPDX-License-Identifier: Apache-2.0
//
// elaa-isac-sim  Near-field ELAA / ISAC simulation library
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "elaa/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace elaa
{

std::vector<double> Scenario::rho_grid() const
{
    std::vector<double> grid;
    for (double r = rho_min; r <= rho_max + 1e-12; r += rho_step)
        grid.push_back(std::round(r * 1e9) / 1e9);
    return grid;
}

namespace
{

std::string trim(const std::string &s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string &msg)
{
    std::ostringstream os;
    os << "config line " << line << ": " << msg;
    throw ConfigError(os.str());
}

double parse_double(const std::string &v, std::size_t line)
{
    char *end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || trim(end)[0] != '\0')
        fail(line, "expected a number, got '" + v + "'");
    return x;
}

std::int64_t parse_int(const std::string &v, std::size_t line)
{
    char *end = nullptr;
    long long x = std::strtoll(v.c_str(), &end, 10);
    if (end == v.c_str() || trim(end)[0] != '\0')
        fail(line, "expected an integer, got '" + v + "'");
    return x;
}

bool parse_bool(const std::string &v, std::size_t line)
{
    if (v == "true")
        return true;
    if (v == "false")
        return false;
    fail(line, "expected true/false, got '" + v + "'");
}

std::vector<std::string> split_array(const std::string &v, std::size_t line)
{
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        fail(line, "expected an array [..], got '" + v + "'");
    std::vector<std::string> items;
    std::string body = v.substr(1, v.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (!item.empty())
            items.push_back(item);
    }
    return items;
}

} // namespace

Scenario parse_scenario_text(const std::string &text)
{
    Scenario s;

    using setter = std::function<void(const std::string &, std::size_t)>;
    std::map<std::string, setter> keys;

    auto dbl = [](double &field) {
        return [&field](const std::string &v, std::size_t line) { field = parse_double(v, line); };
    };
    auto i64 = [](std::int64_t &field) {
        return [&field](const std::string &v, std::size_t line) { field = parse_int(v, line); };
    };
    auto bl = [](bool &field) {
        return [&field](const std::string &v, std::size_t line) { field = parse_bool(v, line); };
    };
    auto dvec = [](std::vector<double> &field) {
        return [&field](const std::string &v, std::size_t line) {
            field.clear();
            for (const auto &item : split_array(v, line))
                field.push_back(parse_double(item, line));
        };
    };
    auto ivec = [](std::vector<std::int64_t> &field) {
        return [&field](const std::string &v, std::size_t line) {
            field.clear();
            for (const auto &item : split_array(v, line))
                field.push_back(parse_int(item, line));
        };
    };

    keys["frequencies_ghz"] = dvec(s.frequencies_ghz);
    keys["side_counts"] = ivec(s.side_counts);
    keys["aperture_side_m"] = dbl(s.aperture_side_m);
    keys["element_size_frac"] = dbl(s.element_size_frac);
    keys["spacing_frac"] = dbl(s.spacing_frac);
    keys["ue_ranges_m"] = dvec(s.ue_ranges_m);
    keys["ue_azimuths_deg"] = dvec(s.ue_azimuths_deg);
    keys["ue_elevations_deg"] = dvec(s.ue_elevations_deg);
    keys["user_counts"] = ivec(s.user_counts);
    keys["target_ranges_m"] = dvec(s.target_ranges_m);
    keys["target_azimuths_deg"] = dvec(s.target_azimuths_deg);
    keys["target_elevations_deg"] = dvec(s.target_elevations_deg);
    keys["target_disk_radius_m"] = dbl(s.target_disk_radius_m);
    keys["target_gain_db"] = dbl(s.target_gain_db);
    keys["clutter_ranges_m"] = dvec(s.clutter_ranges_m);
    keys["clutter_azimuths_deg"] = dvec(s.clutter_azimuths_deg);
    keys["clutter_elevations_deg"] = dvec(s.clutter_elevations_deg);
    keys["clutter_to_noise_db"] = dbl(s.clutter_to_noise_db);
    keys["coherence_symbols"] = i64(s.coherence_symbols);
    keys["pilot_snr_db"] = dbl(s.pilot_snr_db);
    keys["transmit_snr_db"] = dbl(s.transmit_snr_db);
    keys["p_fa"] = dbl(s.p_fa);
    keys["use_estimated_channels"] = bl(s.use_estimated_channels);
    keys["rho_min"] = dbl(s.rho_min);
    keys["rho_max"] = dbl(s.rho_max);
    keys["rho_step"] = dbl(s.rho_step);
    keys["trials"] = i64(s.trials);
    keys["seed"] = [&s](const std::string &v, std::size_t line) {
        s.seed = static_cast<std::uint64_t>(parse_int(v, line));
    };
    keys["reference_distance_m"] = dbl(s.reference_distance_m);
    keys["fig3a_element_size_m"] = dbl(s.fig3a_element_size_m);
    keys["out_dir"] = [&s](const std::string &v, std::size_t line) {
        if (v.size() < 2 || v.front() != '"' || v.back() != '"')
            fail(line, "expected a quoted string for out_dir");
        s.out_dir = v.substr(1, v.size() - 2);
    };

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(line_no, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto it = keys.find(key);
        if (it == keys.end())
            fail(line_no, "unknown key '" + key + "'");
        it->second(value, line_no);
    }

    validate_scenario(s);
    return s;
}

Scenario load_scenario(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

void validate_scenario(const Scenario &s)
{
    auto check = [](bool ok, const std::string &key, const std::string &why) {
        if (!ok)
            throw ConfigError("config key '" + key + "': " + why);
    };

    check(!s.frequencies_ghz.empty(), "frequencies_ghz", "must not be empty");
    for (double f : s.frequencies_ghz)
        check(f > 0.0, "frequencies_ghz", "frequencies must be positive");
    check(s.side_counts.size() == s.frequencies_ghz.size(), "side_counts",
          "must pair one side count with each frequency");
    for (auto c : s.side_counts)
        check(c >= 1, "side_counts", "side counts must be at least 1");
    check(s.element_size_frac > 0.0 && s.element_size_frac <= s.spacing_frac, "element_size_frac",
          "must be positive and not exceed spacing_frac");
    check(s.ue_ranges_m.size() == s.ue_azimuths_deg.size() &&
              s.ue_ranges_m.size() == s.ue_elevations_deg.size(),
          "ue_ranges_m", "UE range/azimuth/elevation lists must have equal length");
    for (double r : s.ue_ranges_m)
        check(r > 0.0, "ue_ranges_m", "ranges must be positive");
    check(!s.user_counts.empty(), "user_counts", "must not be empty");
    for (auto k : s.user_counts)
    {
        check(k >= 1, "user_counts", "user counts must be at least 1");
        check(static_cast<std::size_t>(k) <= s.ue_ranges_m.size(), "user_counts",
              "user count exceeds the number of configured UE points");
        check(k < s.coherence_symbols, "user_counts",
              "pilot length (= K) must be below the coherence interval");
    }
    check(s.target_ranges_m.size() == s.target_azimuths_deg.size() &&
              s.target_ranges_m.size() == s.target_elevations_deg.size() && !s.target_ranges_m.empty(),
          "target_ranges_m", "target lists must be non-empty and of equal length");
    check(s.target_disk_radius_m > 0.0, "target_disk_radius_m", "must be positive");
    check(s.clutter_ranges_m.size() == s.clutter_azimuths_deg.size() &&
              s.clutter_ranges_m.size() == s.clutter_elevations_deg.size(),
          "clutter_ranges_m", "clutter lists must have equal length");
    check(s.coherence_symbols >= 2, "coherence_symbols", "must be at least 2");
    check(s.p_fa > 0.0 && s.p_fa < 1.0, "p_fa", "must lie in (0, 1)");
    check(s.rho_min >= 0.0 && s.rho_max <= 1.0 && s.rho_min <= s.rho_max, "rho_min",
          "rho grid must lie inside [0, 1] with rho_min <= rho_max");
    check(s.rho_step > 0.0, "rho_step", "must be positive");
    check(s.trials >= 1, "trials", "must be at least 1");
    check(s.fig3a_element_size_m > 0.0, "fig3a_element_size_m", "must be positive");
    check(s.reference_distance_m > 0.0, "reference_distance_m", "must be positive");
    check(s.aperture_side_m >= 0.0, "aperture_side_m", "must be non-negative (0 disables)");

    // UE points must not collide with array elements
    check(s.ue_ranges_m.size() >= static_cast<std::size_t>(
                                      *std::max_element(s.user_counts.begin(), s.user_counts.end())),
          "ue_ranges_m", "fewer UE points than the largest user count");
}

} // namespace elaa
