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

#ifndef elaa_propagation_H
#define elaa_propagation_H

#include <Eigen/Dense>
#include <vector>

#include "elaa/geometry.hpp"

namespace elaa
{

using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;

// Point source/sink location relative to the array center. Azimuth is
// measured in the x-y plane from boresight (+y), elevation from the x-y
// plane toward +z.
struct SourcePoint
{
    double range = 0.0;     // m, from array center
    double azimuth = 0.0;   // rad
    double elevation = 0.0; // rad

    vec3 cartesian() const;
};

// Per-element received amplitude law for near-field steering vectors.
// phase_only: equal magnitudes. free_space: magnitude ~ 1/d_n.
// aperture_loss: additionally scaled by sqrt(cos psi_n) for the incidence
// angle psi_n at element n.
enum class AmplitudeModel
{
    phase_only,
    free_space,
    aperture_loss
};

enum class ChannelModel
{
    near_field,
    far_field
};

// Unit-norm steering vector with exact per-element spherical-wave phases
// exp(-j*2*pi*d_n/lambda); relative amplitude taper per `amp` is retained
// under the unit-norm normalization. Throws on a point coincident with an
// element (singular geometry).
cvec near_field_steering(const ArrayGeometry &geometry, const SourcePoint &point, AmplitudeModel amp);

// Unit-norm planar-wavefront steering vector for a source in direction
// (azimuth, elevation); entry magnitudes are all 1/sqrt(N).
cvec far_field_steering(const ArrayGeometry &geometry, double azimuth, double elevation);

// Physical-amplitude variant: per-element magnitude 1 (norm sqrt(N)),
// near- or far-field phases. Used for radar target responses where the
// element count carries aperture gain.
cvec physical_steering(const ArrayGeometry &geometry, const SourcePoint &point, ChannelModel model);

// K x N deterministic LoS channel matrix. Row k is the steering vector of
// ue_points[k] under `model`, scaled so that a UE at reference_distance
// has unit row norm (shifted by pathloss_reference_db); the large-scale
// amplitude follows the 1/d free-space law.
struct ChannelSet
{
    cmat matrix; // K x N
    ChannelModel model = ChannelModel::near_field;
    AmplitudeModel amplitude_model = AmplitudeModel::phase_only;
    std::vector<SourcePoint> ue_points;
};

ChannelSet build_channels(const ArrayGeometry &geometry, const std::vector<SourcePoint> &ue_points,
                          ChannelModel model, AmplitudeModel amp, double pathloss_reference_db,
                          double reference_distance_m);

} // namespace elaa

#endif
