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

#ifndef elaa_experiments_H
#define elaa_experiments_H

#include "elaa/geometry.hpp"
#include "elaa/output.hpp"
#include "elaa/scenario.hpp"

namespace elaa
{

// Scenario array for one configured carrier (aperture-locked when
// aperture_side_m > 0, half-wavelength grid otherwise).
ArrayGeometry scenario_geometry(const Scenario &scenario, std::size_t freq_index);

// Fraunhofer array distance vs. element count at a fixed physical
// element size, one curve per configured carrier.
Table experiment_fig3a(const Scenario &scenario);

// Normalized array gain vs. propagation distance at fixed 1.243 m
// aperture for 3.5 (FR1), 7.8 and 15 (FR3), and 28 GHz (FR2).
Table experiment_fig3b(const Scenario &scenario);

// Steering-vector range correlation around a fixed 30 m boresight focus,
// one curve per configured carrier.
Table experiment_fig4(const Scenario &scenario);

// Near-field vs. far-field disk RCS over range, per configured carrier.
Table experiment_fig5(const Scenario &scenario);

// Writes <name>.csv (and optionally <name>.svg) into out_dir; returns the
// CSV path. Unknown names throw std::invalid_argument.
std::string run_experiment(const std::string &name, const Scenario &scenario,
                           const std::string &out_dir, bool svg);

} // namespace elaa

#endif
