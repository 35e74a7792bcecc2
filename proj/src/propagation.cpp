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

#include "elaa/propagation.hpp"

#include <cmath>
#include <stdexcept>

namespace elaa
{

static constexpr double two_pi = 6.283185307179586476925287;

vec3 SourcePoint::cartesian() const
{
    double ce = std::cos(elevation);
    return {range * ce * std::sin(azimuth), range * ce * std::cos(azimuth), range * std::sin(elevation)};
}

// Unit direction from the array toward (azimuth, elevation)
static vec3 direction(double azimuth, double elevation)
{
    double ce = std::cos(elevation);
    return {ce * std::sin(azimuth), ce * std::cos(azimuth), std::sin(elevation)};
}

cvec near_field_steering(const ArrayGeometry &geometry, const SourcePoint &point, AmplitudeModel amp)
{
    if (point.range <= 0.0)
        throw std::invalid_argument("near_field_steering: range must be positive");

    const std::size_t n = geometry.n_antennas();
    const vec3 p = point.cartesian();
    const double k = two_pi / geometry.wavelength;
    const double eps = 1e-9 * geometry.wavelength + 1e-15;

    cvec a(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const vec3 &e = geometry.positions[i];
        double dx = p[0] - e[0], dy = p[1] - e[1], dz = p[2] - e[2];
        double d = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (d < eps)
            throw std::invalid_argument("near_field_steering: point coincides with an array element");

        double mag = 1.0;
        if (amp == AmplitudeModel::free_space)
            mag = 1.0 / d;
        else if (amp == AmplitudeModel::aperture_loss)
        {
            // incidence angle at element n against the array normal (+y)
            double cos_psi = std::abs(dy) / d;
            mag = std::sqrt(cos_psi) / d;
        }
        double ph = -k * d;
        a(static_cast<Eigen::Index>(i)) = std::complex<double>(mag * std::cos(ph), mag * std::sin(ph));
    }
    a /= a.norm();
    return a;
}

cvec far_field_steering(const ArrayGeometry &geometry, double azimuth, double elevation)
{
    const std::size_t n = geometry.n_antennas();
    // propagation direction of the incoming wave: from source toward array
    const vec3 u = direction(azimuth, elevation);
    const vec3 k_prop = {-u[0], -u[1], -u[2]};
    const double k = two_pi / geometry.wavelength;
    const double mag = 1.0 / std::sqrt(static_cast<double>(n));

    cvec a(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const vec3 &e = geometry.positions[i];
        double ph = -k * (e[0] * k_prop[0] + e[1] * k_prop[1] + e[2] * k_prop[2]);
        a(static_cast<Eigen::Index>(i)) = std::complex<double>(mag * std::cos(ph), mag * std::sin(ph));
    }
    return a;
}

cvec physical_steering(const ArrayGeometry &geometry, const SourcePoint &point, ChannelModel model)
{
    double root_n = std::sqrt(static_cast<double>(geometry.n_antennas()));
    if (model == ChannelModel::near_field)
        return root_n * near_field_steering(geometry, point, AmplitudeModel::phase_only);
    return root_n * far_field_steering(geometry, point.azimuth, point.elevation);
}

ChannelSet build_channels(const ArrayGeometry &geometry, const std::vector<SourcePoint> &ue_points,
                          ChannelModel model, AmplitudeModel amp, double pathloss_reference_db,
                          double reference_distance_m)
{
    if (ue_points.empty())
        throw std::invalid_argument("build_channels: UE list is empty");
    if (reference_distance_m <= 0.0)
        throw std::invalid_argument("build_channels: reference distance must be positive");

    const std::size_t k_users = ue_points.size();
    ChannelSet set;
    set.model = model;
    set.amplitude_model = amp;
    set.ue_points = ue_points;
    set.matrix.resize(static_cast<Eigen::Index>(k_users), static_cast<Eigen::Index>(geometry.n_antennas()));

    const double ref_gain = std::pow(10.0, pathloss_reference_db / 20.0);
    for (std::size_t u = 0; u < k_users; ++u)
    {
        const SourcePoint &pt = ue_points[u];
        cvec a = (model == ChannelModel::near_field)
                     ? near_field_steering(geometry, pt, amp)
                     : far_field_steering(geometry, pt.azimuth, pt.elevation);
        double amplitude = ref_gain * reference_distance_m / pt.range;
        set.matrix.row(static_cast<Eigen::Index>(u)) = amplitude * a.transpose();
    }
    return set;
}

} // namespace elaa
