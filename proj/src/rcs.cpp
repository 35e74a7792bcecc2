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

#include "elaa/rcs.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace elaa
{

static constexpr double pi = 3.141592653589793238462643;

QuadratureMesh make_disk_mesh(std::size_t samples_per_radius, std::size_t samples_per_turn)
{
    if (samples_per_radius < 1 || samples_per_turn < 4)
        throw std::invalid_argument("make_disk_mesh: mesh too small");
    QuadratureMesh mesh;
    mesh.samples_per_radius = samples_per_radius;
    mesh.samples_per_turn = samples_per_turn;
    double dr = 1.0 / static_cast<double>(samples_per_radius);
    double dphi = 2.0 * pi / static_cast<double>(samples_per_turn);
    mesh.radial.resize(samples_per_radius);
    mesh.weights.resize(samples_per_radius);
    for (std::size_t i = 0; i < samples_per_radius; ++i)
    {
        double rho = (static_cast<double>(i) + 0.5) * dr;
        mesh.radial[i] = rho;
        mesh.weights[i] = rho * dr * dphi; // per-point weight, units of a^2
    }
    return mesh;
}

QuadratureMesh auto_disk_mesh(double radius, double wavelength, double oversample)
{
    if (radius <= 0.0 || wavelength <= 0.0 || oversample <= 0.0)
        throw std::invalid_argument("auto_disk_mesh: arguments must be positive");
    double step = wavelength / (10.0 * oversample);
    auto n_r = static_cast<std::size_t>(std::ceil(radius / step));
    if (n_r < 8)
        n_r = static_cast<std::size_t>(std::ceil(8 * oversample));
    auto n_phi = static_cast<std::size_t>(std::ceil(2.0 * pi * radius / step));
    if (n_phi < 16)
        n_phi = 16;
    return make_disk_mesh(n_r, n_phi);
}

double mesh_area(const QuadratureMesh &mesh, double radius)
{
    double sum = 0.0;
    for (double w : mesh.weights)
        sum += w * static_cast<double>(mesh.samples_per_turn);
    return sum * radius * radius;
}

double far_field_rcs_disk(double radius, double wavelength)
{
    if (radius <= 0.0 || wavelength <= 0.0)
        throw std::invalid_argument("far_field_rcs_disk: arguments must be positive");
    double a2 = radius * radius;
    return 4.0 * pi * pi * pi * a2 * a2 / (wavelength * wavelength);
}

double disk_fraunhofer_distance(double radius, double wavelength)
{
    double d = 2.0 * radius;
    return 2.0 * d * d / wavelength;
}

double near_field_rcs_disk(const DiskTarget &target, double wavelength, const QuadratureMesh &mesh)
{
    const double a = target.radius;
    const double r = target.center.range;
    if (a <= 0.0 || wavelength <= 0.0)
        throw std::invalid_argument("near_field_rcs_disk: radius and wavelength must be positive");
    if (r <= 0.0)
        throw std::invalid_argument("near_field_rcs_disk: range must be positive");

    if (mesh.samples_per_radius < 8)
        throw std::invalid_argument("near_field_rcs_disk: mesh under-resolved (need >= 8 samples per radius)");
    double radial_step = a / static_cast<double>(mesh.samples_per_radius);
    double outer_arc = 2.0 * pi * a / static_cast<double>(mesh.samples_per_turn);
    if (radial_step > wavelength / 10.0 || outer_arc > wavelength / 10.0)
        throw std::invalid_argument("near_field_rcs_disk: mesh under-resolved (need >= 10 samples per wavelength)");

    // Disk plane basis: normal toward the source (array center at the origin)
    const vec3 c = target.center.cartesian();
    const double cn = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    const vec3 n_hat = {-c[0] / cn, -c[1] / cn, -c[2] / cn};
    vec3 seed = (std::abs(n_hat[2]) < 0.9) ? vec3{0.0, 0.0, 1.0} : vec3{1.0, 0.0, 0.0};
    vec3 e1 = {n_hat[1] * seed[2] - n_hat[2] * seed[1], n_hat[2] * seed[0] - n_hat[0] * seed[2],
               n_hat[0] * seed[1] - n_hat[1] * seed[0]};
    double e1n = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    e1 = {e1[0] / e1n, e1[1] / e1n, e1[2] / e1n};
    vec3 e2 = {n_hat[1] * e1[2] - n_hat[2] * e1[1], n_hat[2] * e1[0] - n_hat[0] * e1[2],
               n_hat[0] * e1[1] - n_hat[1] * e1[0]};

    const double k = 2.0 * pi / wavelength;
    const double dphi = 2.0 * pi / static_cast<double>(mesh.samples_per_turn);

    // Two-way spherical-wave kernel cos(chi) * exp(-2jk d)/d^2 over the
    // disk; fixed summation order with Kahan compensation.
    double re = 0.0, im = 0.0, re_c = 0.0, im_c = 0.0;
    for (std::size_t i = 0; i < mesh.radial.size(); ++i)
    {
        double rho = mesh.radial[i] * a;
        double w = mesh.weights[i] * a * a;
        for (std::size_t j = 0; j < mesh.samples_per_turn; ++j)
        {
            double phi = (static_cast<double>(j) + 0.5) * dphi;
            double cphi = std::cos(phi), sphi = std::sin(phi);
            double px = c[0] + rho * (cphi * e1[0] + sphi * e2[0]);
            double py = c[1] + rho * (cphi * e1[1] + sphi * e2[1]);
            double pz = c[2] + rho * (cphi * e1[2] + sphi * e2[2]);
            double d = std::sqrt(px * px + py * py + pz * pz);
            double cos_chi = (px * c[0] + py * c[1] + pz * c[2]) / (d * cn);
            double amp = w * cos_chi / (d * d);
            double ph = -2.0 * k * d;
            double vr = amp * std::cos(ph);
            double vi = amp * std::sin(ph);
            double yr = vr - re_c, tr = re + yr;
            re_c = (tr - re) - yr;
            re = tr;
            double yi = vi - im_c, ti = im + yi;
            im_c = (ti - im) - yi;
            im = ti;
        }
    }

    double mag2 = re * re + im * im;
    double kf = k / (2.0 * pi); // = 1/lambda
    return 4.0 * pi * r * r * r * r * kf * kf * mag2;
}

} // namespace elaa
