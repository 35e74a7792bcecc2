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

#include "elaa/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "elaa/rcs.hpp"
#include "elaa/rng.hpp"

namespace elaa
{

static constexpr double two_pi = 6.283185307179586476925287;

ScattererSet make_extended_target(const std::vector<SourcePoint> &points, double disk_radius,
                                  double wavelength, double gain_db, std::uint64_t seed)
{
    if (points.empty())
        throw std::invalid_argument("make_extended_target: need at least one scatterer");

    QuadratureMesh mesh = auto_disk_mesh(disk_radius, wavelength);
    std::vector<double> sigma;
    double total = 0.0;
    for (const SourcePoint &p : points)
    {
        DiskTarget disk{disk_radius, p};
        double s = near_field_rcs_disk(disk, wavelength, mesh);
        sigma.push_back(s);
        total += s;
    }

    double power = std::pow(10.0, gain_db / 10.0);
    gaussian_source rng(seed);
    ScattererSet set;
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        double mag = std::sqrt(power * sigma[i] / total);
        double ph = two_pi * rng.uniform01();
        set.scatterers.push_back({points[i], mag * std::complex<double>(std::cos(ph), std::sin(ph))});
    }
    return set;
}

cmat target_response(const ArrayGeometry &geometry, const ScattererSet &target, ChannelModel model)
{
    if (target.scatterers.empty())
        throw std::invalid_argument("target_response: empty scatterer set");
    const auto n = static_cast<Eigen::Index>(geometry.n_antennas());
    cmat g = cmat::Zero(n, n);
    for (const Scatterer &s : target.scatterers)
    {
        cvec a = physical_steering(geometry, s.point, model);
        g.noalias() += s.reflectivity * (a * a.transpose());
    }
    return g;
}

EchoMeans make_echo_means(const cmat &response, const IsacWaveform &waveform,
                          const EchoModel &echo_model)
{
    const cmat &x = waveform.matrix;
    if (response.cols() != x.rows())
        throw std::invalid_argument("make_echo_means: response/waveform dimension mismatch");

    EchoMeans means;
    means.noise_power = echo_model.noise_power;
    if (echo_model.clutter_response.size() > 0 && echo_model.clutter_power > 0.0)
    {
        cmat cx = echo_model.clutter_response * x;
        double cur = cx.squaredNorm();
        double target = echo_model.clutter_power * static_cast<double>(cx.size());
        means.null_mean = (cur > 0.0) ? cmat(std::sqrt(target / cur) * cx)
                                      : cmat(cmat::Zero(cx.rows(), cx.cols()));
    }
    else
        means.null_mean = cmat::Zero(x.rows(), x.cols());
    means.alt_mean = means.null_mean + response * x;
    return means;
}

cmat synthesize_echo(const cmat &response, const IsacWaveform &waveform, const EchoModel &echo_model,
                     bool target_present, std::uint64_t seed)
{
    EchoMeans means = make_echo_means(response, waveform, echo_model);
    cmat y = target_present ? means.alt_mean : means.null_mean;
    if (echo_model.noise_power > 0.0)
    {
        gaussian_source rng(seed);
        for (Eigen::Index r = 0; r < y.rows(); ++r)
            for (Eigen::Index c = 0; c < y.cols(); ++c)
                y(r, c) += rng.complex_normal(echo_model.noise_power);
    }
    return y;
}

Detector make_detector(const IsacWaveform &waveform, std::size_t n_antennas, double noise_power)
{
    const cmat &x = waveform.matrix;
    Detector det;
    det.n = static_cast<Eigen::Index>(n_antennas);
    det.l = x.cols();
    det.noise_power = noise_power;

    Eigen::BDCSVD<cmat> svd(x, Eigen::ComputeThinV);
    double tol = std::max(x.rows(), x.cols()) * svd.singularValues()(0) * 1e-12;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol)
            ++r;
    det.rank = r;
    if (r < x.cols())
        det.basis = svd.matrixV().leftCols(r);
    return det;
}

double detection_statistic(const Detector &detector, const cmat &received)
{
    if (received.cols() != detector.l)
        throw std::invalid_argument("detection_statistic: frame-length mismatch");
    if (detector.basis.size() == 0)
        return received.squaredNorm();
    return (received * detector.basis).squaredNorm();
}

// Marsaglia-Tsang gamma sampler, shape alpha >= 1, unit scale
static double gamma_sample(gaussian_source &rng, double alpha)
{
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;)
    {
        double x = rng.normal();
        double t = 1.0 + c * x;
        if (t <= 0.0)
            continue;
        double v = t * t * t;
        double u = rng.uniform01();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v))
            return d * v;
    }
}

// One draw of the energy statistic sum |m_i + w_i|^2 over `dims` complex
// entries for a mean of the given total energy. The noise is isotropic,
// so only the mean's energy matters: decomposing the noise into its
// component along the mean and the orthogonal remainder gives the exact
// same distribution as |sqrt(E) + w|^2 + sigma^2 * Gamma(dims-1), which
// needs O(1) draws instead of O(dims) -- essential at full array sizes
// where dims approaches 2*10^5.
double sample_energy_statistic(double mean_energy, double noise_power, std::size_t dims,
                               gaussian_source &rng)
{
    std::complex<double> along =
        std::sqrt(std::max(0.0, mean_energy)) + rng.complex_normal(noise_power);
    double acc = std::norm(along);
    if (dims > 1)
        acc += noise_power * gamma_sample(rng, static_cast<double>(dims - 1));
    return acc;
}

static double trial_statistic(const cmat &mean, double mean_energy, const Detector &detector,
                              double noise_power, std::uint64_t trial_seed)
{
    gaussian_source rng(trial_seed);
    if (detector.basis.size() == 0)
        return sample_energy_statistic(mean_energy, noise_power,
                                       static_cast<std::size_t>(mean.size()), rng);
    cmat y = mean;
    for (Eigen::Index r = 0; r < y.rows(); ++r)
        for (Eigen::Index c = 0; c < y.cols(); ++c)
            y(r, c) += rng.complex_normal(noise_power);
    return (y * detector.basis).squaredNorm();
}

double analytic_energy_threshold(double noise_power, std::size_t dims, double p_fa)
{
    if (p_fa <= 0.0 || p_fa >= 1.0)
        throw std::invalid_argument("analytic_energy_threshold: p_fa must lie in (0, 1)");
    boost::math::chi_squared dist(2.0 * static_cast<double>(dims));
    return 0.5 * noise_power * boost::math::quantile(boost::math::complement(dist, p_fa));
}

static double analytic_threshold(const Detector &detector, double p_fa)
{
    // clutter-centered statistic: the null is exactly central chi-square
    const auto dims =
        static_cast<std::size_t>(detector.n) * static_cast<std::size_t>(detector.rank);
    return analytic_energy_threshold(detector.noise_power, dims, p_fa);
}

double calibrate_threshold(const EchoMeans &means, const Detector &detector, double p_fa,
                           CalibrationPath path, std::size_t trials, std::uint64_t seed)
{
    if (p_fa <= 0.0 || p_fa >= 1.0)
        throw std::invalid_argument("calibrate_threshold: p_fa must lie in (0, 1)");

    if (path == CalibrationPath::analytic)
        return analytic_threshold(detector, p_fa);

    if (static_cast<double>(trials) < 100.0 / p_fa)
        throw std::runtime_error("calibrate_threshold: too few trials for the requested p_fa; "
                                 "use the analytic path");

    std::vector<double> stats(trials);
    const cmat zero = cmat::Zero(means.null_mean.rows(), means.null_mean.cols());
    for (std::size_t t = 0; t < trials; ++t)
        stats[t] = trial_statistic(zero, 0.0, detector, means.noise_power, split_seed(seed, t));
    auto idx = static_cast<std::size_t>((1.0 - p_fa) * static_cast<double>(trials));
    if (idx >= trials)
        idx = trials - 1;
    std::nth_element(stats.begin(), stats.begin() + static_cast<std::ptrdiff_t>(idx), stats.end());
    return stats[idx];
}

PdEstimate wilson_estimate(std::size_t successes, std::size_t trials)
{
    if (trials == 0)
        throw std::invalid_argument("wilson_estimate: zero trials");
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2n = z * z / n;
    PdEstimate est;
    est.p_hat = p;
    est.trials = trials;
    est.ci95_halfwidth = z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n)) / (1.0 + z2n);
    return est;
}

PdEstimate estimate_pd(const EchoMeans &means, const Detector &detector, double threshold,
                       std::size_t trials, std::uint64_t seed, bool target_present)
{
    if (trials == 0)
        throw std::invalid_argument("estimate_pd: zero trials");
    // statistic is clutter-centered: the known null return is subtracted
    const cmat mean = target_present ? cmat(means.alt_mean - means.null_mean)
                                     : cmat(cmat::Zero(means.null_mean.rows(), means.null_mean.cols()));
    const double energy = mean.squaredNorm();
    std::size_t hits = 0;
    for (std::size_t t = 0; t < trials; ++t)
        if (trial_statistic(mean, energy, detector, means.noise_power, split_seed(seed, t)) > threshold)
            ++hits;
    return wilson_estimate(hits, trials);
}

} // namespace elaa
