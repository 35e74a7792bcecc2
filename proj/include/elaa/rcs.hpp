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

#ifndef elaa_rcs_H
#define elaa_rcs_H

#include <cstddef>
#include <vector>

#include "elaa/propagation.hpp"

namespace elaa
{

// Perfectly conducting circular disk, facing the array center by default.
struct DiskTarget
{
    double radius = 0.0; // m
    SourcePoint center;
};

// Midpoint polar quadrature over the unit disk, scaled by the target
// radius on use. Weights sum to pi*a^2 exactly (up to rounding).
struct QuadratureMesh
{
    std::size_t samples_per_radius = 0;
    std::size_t samples_per_turn = 0;
    std::vector<double> radial;  // midpoint radii, units of a
    std::vector<double> weights; // per-ring weight, units of a^2 (full ring / samples_per_turn applied on use)
};

QuadratureMesh make_disk_mesh(std::size_t samples_per_radius, std::size_t samples_per_turn);

// Mesh resolved for a given disk and wavelength: radial step and outer
// arc length both at most wavelength/10, with at least 8 radial samples.
QuadratureMesh auto_disk_mesh(double radius, double wavelength, double oversample = 1.0);

// Sum of quadrature weights for a disk of the given radius; equals
// pi*radius^2 (mesh sanity check).
double mesh_area(const QuadratureMesh &mesh, double radius);

// Classical far-field disk RCS 4*pi^3*a^4/lambda^2.
double far_field_rcs_disk(double radius, double wavelength);

// Scalar physical-optics monostatic RCS under point-source spherical-wave
// illumination from the array center: 4*pi*r^2*|E_s|^2/|E_inc(center)|^2.
// Converges to far_field_rcs_disk as the range grows. Throws a resolution
// error when the mesh has fewer than 8 samples per radius or fewer than
// 10 samples per wavelength across the disk.
double near_field_rcs_disk(const DiskTarget &target, double wavelength, const QuadratureMesh &mesh);

// The disk's own Fraunhofer boundary 2*(2a)^2/lambda, used when judging
// near-to-far convergence of the target return.
double disk_fraunhofer_distance(double radius, double wavelength);

} // namespace elaa

#endif
