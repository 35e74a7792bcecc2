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

#include "elaa/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace elaa
{

static ArrayGeometry build_grid(double carrier_frequency, std::size_t side_count,
                                double element_size, double spacing)
{
    if (carrier_frequency <= 0.0)
        throw std::invalid_argument("build_upa: carrier frequency must be positive");
    if (side_count < 1)
        throw std::invalid_argument("build_upa: side_count must be at least 1");
    if (element_size > spacing && side_count > 1)
        throw std::invalid_argument("build_upa: element size exceeds spacing (elements overlap)");

    ArrayGeometry g;
    g.carrier_frequency = carrier_frequency;
    g.wavelength = speed_of_light / carrier_frequency;
    g.side_count = side_count;
    g.element_size = element_size;
    g.spacing = spacing;
    g.aperture_side = static_cast<double>(side_count - 1) * spacing + element_size;
    g.aperture_diagonal = std::sqrt(2.0) * g.aperture_side;

    double half = 0.5 * static_cast<double>(side_count - 1);
    g.positions.reserve(side_count * side_count);
    for (std::size_t i = 0; i < side_count; ++i)
        for (std::size_t j = 0; j < side_count; ++j)
        {
            double x = (static_cast<double>(i) - half) * spacing;
            double z = (static_cast<double>(j) - half) * spacing;
            g.positions.push_back({x, 0.0, z});
        }
    return g;
}

ArrayGeometry build_upa(double carrier_frequency, std::size_t side_count,
                        double element_size_frac, double spacing_frac)
{
    if (carrier_frequency <= 0.0)
        throw std::invalid_argument("build_upa: carrier frequency must be positive");
    if (element_size_frac > spacing_frac)
        throw std::invalid_argument("build_upa: element_size_frac exceeds spacing_frac (elements overlap)");
    double lambda = speed_of_light / carrier_frequency;
    return build_grid(carrier_frequency, side_count, element_size_frac * lambda, spacing_frac * lambda);
}

ArrayGeometry build_upa_with_aperture(double carrier_frequency, std::size_t side_count,
                                      double element_size_frac, double aperture_side_m)
{
    if (carrier_frequency <= 0.0)
        throw std::invalid_argument("build_upa_with_aperture: carrier frequency must be positive");
    if (aperture_side_m <= 0.0)
        throw std::invalid_argument("build_upa_with_aperture: aperture side must be positive");
    double lambda = speed_of_light / carrier_frequency;
    double element_size = element_size_frac * lambda;
    if (side_count == 1)
        return build_grid(carrier_frequency, 1, aperture_side_m, aperture_side_m);
    double spacing = (aperture_side_m - element_size) / static_cast<double>(side_count - 1);
    if (spacing <= 0.0)
        throw std::invalid_argument("build_upa_with_aperture: aperture too small for the element size");
    return build_grid(carrier_frequency, side_count, element_size, spacing);
}

double fraunhofer_distance(const ArrayGeometry &geometry)
{
    return 2.0 * geometry.aperture_diagonal * geometry.aperture_diagonal / geometry.wavelength;
}

double fraunhofer_element_formula(std::size_t n_antennas, double element_dim, double wavelength)
{
    if (n_antennas < 1 || element_dim <= 0.0 || wavelength <= 0.0)
        throw std::invalid_argument("fraunhofer_element_formula: all arguments must be positive");
    // N * (per-element distance): keeps linearity in N bit-exact
    return static_cast<double>(n_antennas) * (2.0 * element_dim * element_dim / wavelength);
}

} // namespace elaa
