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

#include "elaa/rcs.hpp"
#include "elaa/rng.hpp"

using namespace elaa;

static constexpr double pi = 3.141592653589793238462643;

TEST_CASE("far-field disk RCS closed form")
{
    // 7.8 GHz, a = 0.1 m
    double lambda = 0.03843;
    CHECK(far_field_rcs_disk(0.1, lambda) == doctest::Approx(8.40).epsilon(0.002));

    // exact scalings
    double base = far_field_rcs_disk(0.2, 0.05);
    CHECK(far_field_rcs_disk(0.2, 0.025) == doctest::Approx(4.0 * base).epsilon(1e-12));
    CHECK(far_field_rcs_disk(0.4, 0.05) == doctest::Approx(16.0 * base).epsilon(1e-12));

    // machine-precision agreement with the formula on random (a, lambda)
    gaussian_source rng(77);
    for (int i = 0; i < 10; ++i)
    {
        double a = 0.05 + 0.4 * rng.uniform01();
        double wl = 0.01 + 0.08 * rng.uniform01();
        double expected = 4.0 * pi * pi * pi * a * a * a * a / (wl * wl);
        CHECK(far_field_rcs_disk(a, wl) == doctest::Approx(expected).epsilon(1e-14));
    }

    CHECK_THROWS_AS(far_field_rcs_disk(-0.1, 0.02), std::invalid_argument);
    CHECK_THROWS_AS(far_field_rcs_disk(0.1, 0.0), std::invalid_argument);
}

TEST_CASE("quadrature weights sum to the disk area")
{
    for (double a : {0.1, 0.25, 0.7})
    {
        QuadratureMesh mesh = auto_disk_mesh(a, 0.03843);
        CHECK(mesh_area(mesh, a) == doctest::Approx(pi * a * a).epsilon(1e-3));
    }
}

TEST_CASE("under-resolved meshes are rejected")
{
    DiskTarget disk{0.25, SourcePoint{20.0, 0.0, 0.0}};
    CHECK_THROWS_AS(near_field_rcs_disk(disk, 0.03843, make_disk_mesh(4, 64)),
                    std::invalid_argument);
    // 8 radial samples but coarser than lambda/10
    CHECK_THROWS_AS(near_field_rcs_disk(disk, 0.001, make_disk_mesh(8, 64)), std::invalid_argument);
    CHECK_THROWS_AS(near_field_rcs_disk(DiskTarget{0.25, SourcePoint{-2.0, 0.0, 0.0}}, 0.038,
                                        auto_disk_mesh(0.25, 0.038)),
                    std::invalid_argument);
}

TEST_CASE("near-field RCS converges to the far-field value at long range")
{
    double lambda = 0.03843; // 7.8 GHz
    double a = 0.1;
    QuadratureMesh mesh = auto_disk_mesh(a, lambda);
    double ff = far_field_rcs_disk(a, lambda);
    double far_range = 1000.0 * disk_fraunhofer_distance(a, lambda);
    double nf = near_field_rcs_disk(DiskTarget{a, SourcePoint{far_range, 0.0, 0.0}}, lambda, mesh);
    CHECK(nf == doctest::Approx(ff).epsilon(0.05));
}

TEST_CASE("mesh refinement self-consistency below 1%")
{
    double lambda = 0.03843;
    double a = 0.25;
    QuadratureMesh coarse = auto_disk_mesh(a, lambda);
    QuadratureMesh fine = auto_disk_mesh(a, lambda, 2.0);
    for (double r : {2.0, 10.0, 40.0, 150.0})
    {
        DiskTarget disk{a, SourcePoint{r, 0.0, 0.0}};
        double c = near_field_rcs_disk(disk, lambda, coarse);
        double f = near_field_rcs_disk(disk, lambda, fine);
        CHECK(std::abs(c - f) / f < 0.01);
    }
}

TEST_CASE("range sweep reproduces the near-field deviation and convergence shape")
{
    double lambda = 0.03843; // 7.8 GHz
    double a = 0.25;
    QuadratureMesh mesh = auto_disk_mesh(a, lambda);
    double ff_db = 10.0 * std::log10(far_field_rcs_disk(a, lambda));
    double d_f = disk_fraunhofer_distance(a, lambda); // ~13 m

    bool deviates_close = false, approaches_beyond = false;
    for (double r = 1.0; r <= 200.0; r *= 1.06)
    {
        double nf = near_field_rcs_disk(DiskTarget{a, SourcePoint{r, 0.0, 0.0}}, lambda, mesh);
        double dev = std::abs(10.0 * std::log10(nf) - ff_db);
        if (r < 0.5 * d_f && dev > 1.0)
            deviates_close = true;
        if (r > d_f && dev < 1.0)
            approaches_beyond = true;
        CHECK(nf >= 0.0);
    }
    CHECK(deviates_close);
    CHECK(approaches_beyond);
}

TEST_CASE("far-field asymptote holds beyond 100x the disk Fraunhofer distance")
{
    double lambda = 0.02; // 15 GHz
    double a = 0.15;
    QuadratureMesh mesh = auto_disk_mesh(a, lambda);
    double ff = far_field_rcs_disk(a, lambda);
    double d_f = disk_fraunhofer_distance(a, lambda);
    for (double mult : {100.0, 300.0, 1000.0, 3000.0})
    {
        double nf = near_field_rcs_disk(DiskTarget{a, SourcePoint{mult * d_f, 0.0, 0.0}}, lambda, mesh);
        CHECK(std::abs(nf / ff - 1.0) < 0.05);
    }
}

TEST_CASE("long-range RCS ratio across carriers")
{
    double a = 0.2;
    double lam78 = 2.998e8 / 7.8e9, lam15 = 2.998e8 / 15e9;
    double r = 500.0 * disk_fraunhofer_distance(a, lam15);
    double s78 = near_field_rcs_disk(DiskTarget{a, SourcePoint{r, 0.0, 0.0}}, lam78,
                                     auto_disk_mesh(a, lam78));
    double s15 = near_field_rcs_disk(DiskTarget{a, SourcePoint{r, 0.0, 0.0}}, lam15,
                                     auto_disk_mesh(a, lam15));
    CHECK(s15 / s78 == doctest::Approx((15.0 / 7.8) * (15.0 / 7.8)).epsilon(0.02));
}
