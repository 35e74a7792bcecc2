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

#ifndef elaa_analytics_H
#define elaa_analytics_H

#include <vector>

#include "elaa/propagation.hpp"

namespace elaa
{

struct CurvePoint
{
    double abscissa = 0.0; // m or count
    double value = 0.0;    // linear
    double value_db = 0.0; // 10*log10(value)
};

// Normalized array gain at a boresight point: coherently combined
// per-element received amplitudes relative to N co-located reference
// elements at the array center, (sum a_n)^2 / (N * a_ref)^2. Tends to 1
// as the distance grows; identically 1 for the phase-only model.
double normalized_array_gain(const ArrayGeometry &geometry, double distance, AmplitudeModel amp);

// Power correlation |a(p_a)^H a(p_b)|^2 of unit-norm phase-only steering
// vectors; isolates wavefront-curvature effects. Always in [0, 1].
double steering_correlation(const ArrayGeometry &geometry, const SourcePoint &point_a,
                            const SourcePoint &point_b);

// Correlation of a fixed point against a probe moving along the same
// direction, one CurvePoint per range sample.
std::vector<CurvePoint> correlation_range_sweep(const ArrayGeometry &geometry,
                                                const SourcePoint &fixed_point,
                                                const std::vector<double> &probe_ranges);

// Gain-vs-distance table for one geometry.
std::vector<CurvePoint> gain_distance_sweep(const ArrayGeometry &geometry,
                                            const std::vector<double> &distances, AmplitudeModel amp);

} // namespace elaa

#endif
