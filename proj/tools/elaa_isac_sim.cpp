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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "elaa/experiments.hpp"
#include "elaa/tradeoff.hpp"

int main(int argc, char **argv)
{
    CLI::App app{"elaa-isac-sim: near-field ELAA / ISAC experiment runner"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    bool svg = false, full = false;
    std::int64_t seed_override = -1, trials_override = -1;

    app.add_option("--config", config_path, "scenario config file (flat key=value)");
    app.add_option("--seed", seed_override, "override the scenario master seed");
    app.add_option("--trials", trials_override, "override the Monte Carlo trial count");
    app.add_option("--out", out_override, "override the output directory");
    app.add_flag("--svg", svg, "also render line-plot SVGs");
    app.add_flag("--full", full, "disable desk-scale caps (large arrays, full case grid)");

    // options are global but may appear after the subcommand
    static const char *fig_names[] = {"fig3a", "fig3b", "fig4", "fig5"};
    for (const char *name : fig_names)
        app.add_subcommand(name, std::string("write the ") + name + " curve CSV")->fallthrough();
    app.add_subcommand("tradeoff", "run the rate-detection trade-off sweep")->fallthrough();

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    elaa::Scenario scenario;
    try
    {
        if (!config_path.empty())
            scenario = elaa::load_scenario(config_path);
        if (seed_override >= 0)
            scenario.seed = static_cast<std::uint64_t>(seed_override);
        if (trials_override >= 0)
            scenario.trials = trials_override;
        if (!out_override.empty())
            scenario.out_dir = out_override;
        elaa::validate_scenario(scenario);
    }
    catch (const std::exception &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try
    {
        if (command == "tradeoff")
        {
            elaa::TradeoffResult result = elaa::run_tradeoff(scenario, full);
            elaa::write_tradeoff(result, scenario.out_dir, svg);
            std::cout << "wrote " << scenario.out_dir << "/tradeoff.csv ("
                      << result.curve.rows.size() << " rows, "
                      << result.manifest.rows.size() << " cases)\n";
        }
        else
        {
            std::string path = elaa::run_experiment(command, scenario, scenario.out_dir, svg);
            std::cout << "wrote " << path << "\n";
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
