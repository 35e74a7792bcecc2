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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "elaa/analytics.hpp"
#include "elaa/geometry.hpp"

using namespace elaa;

namespace
{
ArrayGeometry deployment_array(double f = 7.8e9, std::size_t side = 31)
{
    return build_upa_with_aperture(f, side, 0.25, 1.243);
}

// counts strict local maxima below max_db, skipping a guard window
// around the focal range
int count_secondary_maxima(const std::vector<CurvePoint> &curve, double focus, double guard,
                           double max_db)
{
    int count = 0;
    for (std::size_t i = 1; i + 1 < curve.size(); ++i)
    {
        if (std::abs(curve[i].abscissa - focus) < guard)
            continue;
        if (curve[i].value_db < max_db && curve[i].value_db > curve[i - 1].value_db &&
            curve[i].value_db > curve[i + 1].value_db)
            ++count;
    }
    return count;
}
} // namespace

TEST_CASE("normalized array gain: N=1 is exactly 1 at any distance")
{
    ArrayGeometry g = build_upa(8e9, 1, 0.25, 0.5);
    for (double d : {0.5, 3.0, 100.0})
    {
        CHECK(normalized_array_gain(g, d, AmplitudeModel::free_space) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(normalized_array_gain(g, d, AmplitudeModel::phase_only) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("normalized array gain approaches 1 in the far field")
{
    ArrayGeometry g = deployment_array();
    double d_fa = fraunhofer_distance(g);
    CHECK(normalized_array_gain(g, 100.0 * d_fa, AmplitudeModel::aperture_loss) ==
          doctest::Approx(1.0).epsilon(0.01));
    CHECK(normalized_array_gain(g, 100.0 * d_fa, AmplitudeModel::free_space) ==
          doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("deep near field loses array gain under the aperture-loss model")
{
    ArrayGeometry g = deployment_array();
    double g_close = normalized_array_gain(g, 1.0, AmplitudeModel::aperture_loss);
    double g_dfa = normalized_array_gain(g, fraunhofer_distance(g), AmplitudeModel::aperture_loss);
    CHECK(g_close < 1.0);
    CHECK(g_close < g_dfa);
}

TEST_CASE("gain curve is continuous: 1% distance steps change it by < 5%")
{
    ArrayGeometry g = deployment_array();
    double d = 0.8;
    double prev = normalized_array_gain(g, d, AmplitudeModel::aperture_loss);
    for (int i = 0; i < 600; ++i)
    {
        d *= 1.01;
        double cur = normalized_array_gain(g, d, AmplitudeModel::aperture_loss);
        CHECK(std::abs(cur - prev) / prev < 0.05);
        prev = cur;
    }
    CHECK_THROWS_AS(normalized_array_gain(g, 0.0, AmplitudeModel::free_space), std::invalid_argument);
}

TEST_CASE("steering correlation: self, symmetry, bounds")
{
    ArrayGeometry g = deployment_array();
    SourcePoint a{30.0, 0.1, 0.05};
    SourcePoint b{55.0, -0.4, 0.1};
    CHECK(steering_correlation(g, a, a) == doctest::Approx(1.0).epsilon(1e-12));
    double ab = steering_correlation(g, a, b);
    double ba = steering_correlation(g, b, a);
    CHECK(std::abs(ab - ba) < 1e-12);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
}

TEST_CASE("far-field pair along one direction is fully correlated")
{
    ArrayGeometry g = deployment_array();
    double d_fa = fraunhofer_distance(g);
    SourcePoint a{50.0 * d_fa, 0.3, 0.0};
    SourcePoint b{80.0 * d_fa, 0.3, 0.0};
    CHECK(steering_correlation(g, a, b) >= 0.999);
}

TEST_CASE("finite depth of focus: secondary maxima along the range sweep at 15 GHz")
{
    ArrayGeometry g = deployment_array(15e9, 39);
    SourcePoint focus{30.0, 0.0, 0.0};

    // the innermost secondary lobes sit below 4 m for this aperture,
    // so the sweep starts at 2 m to capture more than one of them
    std::vector<double> ranges;
    for (double r = 2.0; r <= 300.0; r *= 1.003)
        ranges.push_back(r);
    auto curve = correlation_range_sweep(g, focus, ranges);

    // main lobe at the focal range itself
    double best = 0.0;
    for (const auto &p : curve)
        if (std::abs(p.abscissa - 30.0) < 0.5)
            best = std::max(best, p.value);
    CHECK(best > 0.9);

    CHECK(count_secondary_maxima(curve, 30.0, 5.0, -0.5) >= 2);
}
