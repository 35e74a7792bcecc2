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

#ifndef elaa_geometry_H
#define elaa_geometry_H

#include <array>
#include <cstddef>
#include <vector>

namespace elaa
{

constexpr double speed_of_light = 2.998e8; // m/s

using vec3 = std::array<double, 3>;

// Square uniform planar array in the x-z plane, centered at the origin,
// boresight along +y. Immutable after construction.
struct ArrayGeometry
{
    double carrier_frequency = 0.0; // Hz
    double wavelength = 0.0;        // m
    std::size_t side_count = 0;     // elements per side; N = side_count^2
    double element_size = 0.0;      // square element edge d_a, m
    double spacing = 0.0;           // center-to-center, m
    double aperture_side = 0.0;     // (side_count-1)*spacing + element_size, m
    double aperture_diagonal = 0.0; // sqrt(2)*aperture_side, m
    std::vector<vec3> positions;    // element centers, m

    std::size_t n_antennas() const { return side_count * side_count; }
};

// Element grid at a spacing and element size given as fractions of the
// carrier wavelength. Throws std::invalid_argument on non-positive
// frequency/side_count or when elements would overlap.
ArrayGeometry build_upa(double carrier_frequency, std::size_t side_count,
                        double element_size_frac, double spacing_frac);

// Same grid, but with the spacing derived from a prescribed physical
// aperture side length: spacing = (aperture_side - d_a) / (side_count - 1).
ArrayGeometry build_upa_with_aperture(double carrier_frequency, std::size_t side_count,
                                      double element_size_frac, double aperture_side_m);

// Aperture-based Fraunhofer array distance 2*D^2/lambda with D the
// aperture diagonal. Authoritative boundary for all scenario logic.
double fraunhofer_distance(const ArrayGeometry &geometry);

// Element-count form 2*N*d_a^2/lambda (exactly linear in N). Used for the
// aperture-scaling curves only.
double fraunhofer_element_formula(std::size_t n_antennas, double element_dim, double wavelength);

} // namespace elaa

#endif
