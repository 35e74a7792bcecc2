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

#include "elaa/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace elaa
{

double normalized_array_gain(const ArrayGeometry &geometry, double distance, AmplitudeModel amp)
{
    if (distance <= 0.0)
        throw std::invalid_argument("normalized_array_gain: distance must be positive");

    const std::size_t n = geometry.n_antennas();
    const double a_ref = (amp == AmplitudeModel::phase_only) ? 1.0 : 1.0 / distance;

    // Kahan-compensated sum of the phase-aligned per-element amplitudes
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const vec3 &e = geometry.positions[i];
        double dx = -e[0], dy = distance - e[1], dz = -e[2];
        double d = std::sqrt(dx * dx + dy * dy + dz * dz);
        double a = 1.0;
        if (amp == AmplitudeModel::free_space)
            a = 1.0 / d;
        else if (amp == AmplitudeModel::aperture_loss)
            a = std::sqrt(std::abs(dy) / d) / d;
        double y = a - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double denom = static_cast<double>(n) * a_ref;
    return (sum * sum) / (denom * denom);
}

double steering_correlation(const ArrayGeometry &geometry, const SourcePoint &point_a,
                            const SourcePoint &point_b)
{
    cvec a = near_field_steering(geometry, point_a, AmplitudeModel::phase_only);
    cvec b = near_field_steering(geometry, point_b, AmplitudeModel::phase_only);
    double c = std::norm(a.dot(b)); // |a^H b|^2
    return c > 1.0 ? 1.0 : c;
}

std::vector<CurvePoint> correlation_range_sweep(const ArrayGeometry &geometry,
                                                const SourcePoint &fixed_point,
                                                const std::vector<double> &probe_ranges)
{
    cvec a = near_field_steering(geometry, fixed_point, AmplitudeModel::phase_only);
    std::vector<CurvePoint> curve;
    curve.reserve(probe_ranges.size());
    for (double r : probe_ranges)
    {
        SourcePoint probe{r, fixed_point.azimuth, fixed_point.elevation};
        cvec b = near_field_steering(geometry, probe, AmplitudeModel::phase_only);
        double c = std::norm(a.dot(b));
        if (c > 1.0)
            c = 1.0;
        curve.push_back({r, c, 10.0 * std::log10(c > 0.0 ? c : 1e-300)});
    }
    return curve;
}

std::vector<CurvePoint> gain_distance_sweep(const ArrayGeometry &geometry,
                                            const std::vector<double> &distances, AmplitudeModel amp)
{
    std::vector<CurvePoint> curve;
    curve.reserve(distances.size());
    for (double d : distances)
    {
        double g = normalized_array_gain(geometry, d, amp);
        curve.push_back({d, g, 10.0 * std::log10(g > 0.0 ? g : 1e-300)});
    }
    return curve;
}

} // namespace elaa
