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

#include "elaa/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "elaa/analytics.hpp"
#include "elaa/geometry.hpp"
#include "elaa/rcs.hpp"

namespace elaa
{

ArrayGeometry scenario_geometry(const Scenario &scenario, std::size_t freq_index)
{
    if (freq_index >= scenario.frequencies_ghz.size())
        throw std::invalid_argument("scenario_geometry: frequency index out of range");
    double f = scenario.frequencies_ghz[freq_index] * 1e9;
    auto side = static_cast<std::size_t>(scenario.side_counts[freq_index]);
    if (scenario.aperture_side_m > 0.0)
        return build_upa_with_aperture(f, side, scenario.element_size_frac, scenario.aperture_side_m);
    return build_upa(f, side, scenario.element_size_frac, scenario.spacing_frac);
}

static std::vector<double> log_grid(double lo, double hi, std::size_t count)
{
    std::vector<double> g;
    g.reserve(count);
    double llo = std::log10(lo), lhi = std::log10(hi);
    for (std::size_t i = 0; i < count; ++i)
        g.push_back(std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) /
                                             static_cast<double>(count - 1)));
    return g;
}

static std::string freq_label(double f_ghz)
{
    return format_number(f_ghz) + "GHz";
}

Table experiment_fig3a(const Scenario &scenario)
{
    Table t;
    t.columns = {"n_antennas", "aperture_side_m"};
    for (double f : scenario.frequencies_ghz)
        t.columns.push_back("dfa_m_" + freq_label(f));

    const double d_a = scenario.fig3a_element_size_m;
    for (std::size_t side = 2; side <= 64; ++side)
    {
        std::size_t n = side * side;
        std::vector<std::string> row{format_number(static_cast<double>(n)),
                                     format_number(static_cast<double>(side) * d_a)};
        for (double f : scenario.frequencies_ghz)
        {
            double lambda = speed_of_light / (f * 1e9);
            row.push_back(format_number(fraunhofer_element_formula(n, d_a, lambda)));
        }
        t.add_row(row);
    }
    return t;
}

Table experiment_fig3b(const Scenario &scenario)
{
    // Fixed physical aperture across carriers; band labels: 3.5 GHz is
    // FR1, 7.8 and 15 GHz FR3, 28 GHz FR2.
    const std::vector<double> freqs = {3.5, 7.8, 15.0, 28.0};
    const double aperture = scenario.aperture_side_m > 0.0 ? scenario.aperture_side_m : 1.243;

    std::vector<ArrayGeometry> arrays;
    double max_dfa = 0.0;
    for (double f_ghz : freqs)
    {
        double f = f_ghz * 1e9;
        double lambda = speed_of_light / f;
        auto side = static_cast<std::size_t>(
            std::floor(aperture / (lambda * scenario.spacing_frac)) + 1);
        arrays.push_back(build_upa_with_aperture(f, side, scenario.element_size_frac, aperture));
        max_dfa = std::max(max_dfa, fraunhofer_distance(arrays.back()));
    }

    Table t;
    t.columns = {"distance_m"};
    static const char *bands[] = {"FR1", "FR3", "FR3", "FR2"};
    for (std::size_t i = 0; i < freqs.size(); ++i)
        t.columns.push_back("gain_" + freq_label(freqs[i]) + "_" + bands[i]);

    for (double d : log_grid(1.0, 120.0 * max_dfa, 140))
    {
        std::vector<std::string> row{format_number(d)};
        for (const auto &g : arrays)
            row.push_back(format_number(normalized_array_gain(g, d, AmplitudeModel::aperture_loss)));
        t.add_row(row);
    }
    return t;
}

Table experiment_fig4(const Scenario &scenario)
{
    Table t;
    t.columns = {"probe_range_m"};
    for (double f : scenario.frequencies_ghz)
        t.columns.push_back("corr_db_" + freq_label(f));

    // sweep starts at 2 m so the innermost focal lobes (below 4 m at
    // 15 GHz with this aperture) are visible in the plot
    const SourcePoint focus{30.0, 0.0, 0.0};
    std::vector<double> ranges = log_grid(2.0, 300.0, 1600);

    std::vector<std::vector<CurvePoint>> curves;
    for (std::size_t i = 0; i < scenario.frequencies_ghz.size(); ++i)
        curves.push_back(correlation_range_sweep(scenario_geometry(scenario, i), focus, ranges));

    for (std::size_t r = 0; r < ranges.size(); ++r)
    {
        std::vector<std::string> row{format_number(ranges[r])};
        for (const auto &curve : curves)
            row.push_back(format_number(curve[r].value_db));
        t.add_row(row);
    }
    return t;
}

Table experiment_fig5(const Scenario &scenario)
{
    Table t;
    t.columns = {"range_m"};
    for (double f : scenario.frequencies_ghz)
    {
        t.columns.push_back("rcs_nf_dbsm_" + freq_label(f));
        t.columns.push_back("rcs_ff_dbsm_" + freq_label(f));
    }

    const double a = scenario.target_disk_radius_m;
    std::vector<double> ranges = log_grid(1.0, 200.0, 90);

    std::vector<double> wavelengths, ff_dbsm;
    std::vector<QuadratureMesh> meshes;
    for (double f : scenario.frequencies_ghz)
    {
        double lambda = speed_of_light / (f * 1e9);
        wavelengths.push_back(lambda);
        meshes.push_back(auto_disk_mesh(a, lambda));
        ff_dbsm.push_back(10.0 * std::log10(far_field_rcs_disk(a, lambda)));
    }

    for (double r : ranges)
    {
        std::vector<std::string> row{format_number(r)};
        for (std::size_t i = 0; i < wavelengths.size(); ++i)
        {
            DiskTarget disk{a, SourcePoint{r, 0.0, 0.0}};
            double nf = near_field_rcs_disk(disk, wavelengths[i], meshes[i]);
            row.push_back(format_number(10.0 * std::log10(nf > 0.0 ? nf : 1e-300)));
            row.push_back(format_number(ff_dbsm[i]));
        }
        t.add_row(row);
    }
    return t;
}

std::string run_experiment(const std::string &name, const Scenario &scenario,
                           const std::string &out_dir, bool svg)
{
    Table t;
    bool log_x = true;
    if (name == "fig3a")
    {
        t = experiment_fig3a(scenario);
        log_x = false;
    }
    else if (name == "fig3b")
        t = experiment_fig3b(scenario);
    else if (name == "fig4")
        t = experiment_fig4(scenario);
    else if (name == "fig5")
        t = experiment_fig5(scenario);
    else
        throw std::invalid_argument("run_experiment: unknown experiment '" + name + "'");

    std::filesystem::create_directories(out_dir);
    std::string csv_path = out_dir + "/" + name + ".csv";
    write_csv(t, csv_path);
    if (svg)
        write_svg_lineplot(t, out_dir + "/" + name + ".svg", name, log_x);
    return csv_path;
}

} // namespace elaa
